#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hecke/shapes.hpp"

using namespace hecke;

namespace {

PlacedShape single_page(const Scalar& token, std::vector<long> outer, std::vector<long> inner = {}) {
  return PlacedShape({PageRef{token, SkewShape(Partition(std::move(outer)), Partition(std::move(inner)))}});
}

// Independent oracle: count standard fillings by testing every bijection.
long brute_force_standard_count(const PlacedShape& s) {
  long n = s.box_count();
  std::vector<long> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    StandardTableau t;
    t.box_of_entry = perm;
    if (is_standard(s, t)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

TEST(Partitions, ValidationAndCounts) {
  EXPECT_NO_THROW(Partition({3, 2, 2}));
  EXPECT_THROW(Partition({2, 3}), Error);
  EXPECT_THROW(Partition({1, -1}), Error);
  EXPECT_EQ(Partition({5, 5, 3, 3, 1, 1}).size(), 18);
  EXPECT_EQ(partitions_of(5).size(), 7u);
  EXPECT_EQ(partitions_of(0).size(), 1u);
}

TEST(SkewShapes, Containment) {
  EXPECT_NO_THROW(SkewShape(Partition({3, 2}), Partition({1})));
  EXPECT_THROW(SkewShape(Partition({2, 1}), Partition({3})), Error);
  EXPECT_THROW(SkewShape(Partition({2}), Partition({1, 1})), Error);
}

TEST(PlacedShapes, ConstructionErrors) {
  EXPECT_THROW(single_page(Scalar::zero(), {1}), Error);
  EXPECT_THROW(single_page(Scalar::one(), {1}, {1}), Error);
  // Tokens 1 and q^2 collide: they differ by q^(2k) with k = 1 <= n.
  EXPECT_THROW(PlacedShape({PageRef{Scalar::one(), SkewShape(Partition({1}), Partition())},
                            PageRef{Scalar::q(2), SkewShape(Partition({1}), Partition())}}),
               Error);
  // Tokens q^3 and q^5 likewise.
  EXPECT_THROW(PlacedShape({PageRef{Scalar::q(3), SkewShape(Partition({1}), Partition())},
                            PageRef{Scalar::q(5), SkewShape(Partition({1}), Partition())}}),
               Error);
  // Tokens 1 and q^3 are separated for every |k| <= n.
  EXPECT_NO_THROW(PlacedShape({PageRef{Scalar::one(), SkewShape(Partition({1}), Partition())},
                               PageRef{Scalar::q(3), SkewShape(Partition({1}), Partition())}}));
}

TEST(PlacedShapes, EighteenBoxPage) {
  PlacedShape s = single_page(Scalar::one(), {5, 5, 3, 3, 1, 1});
  EXPECT_EQ(s.box_count(), 18);
}

TEST(PlacedShapes, NumberingMatchesFourteenBoxPicture) {
  // Skew page lambda = (9,7,7,4,2,1), mu = (5,4,4,3), placed so its
  // contents are (-7,-6,-5,-2,0,1,1,2,2,3,3,4,5,6): token q^-4 shifts the
  // diagonal indices by -2.
  PlacedShape s = single_page(Scalar::q(-4), {9, 7, 7, 4, 2, 1}, {5, 4, 4, 3});
  ASSERT_EQ(s.box_count(), 14);
  std::vector<long> expected = {-7, -6, -5, -2, 0, 1, 1, 2, 2, 3, 3, 4, 5, 6};
  for (long b = 0; b < 14; ++b) EXPECT_EQ(s.content(b), Scalar::q(2 * expected[b])) << "box " << b;
  // First box is the southwest corner (row 6, col 1).
  EXPECT_EQ(s.boxes()[0].row, 6);
  EXPECT_EQ(s.boxes()[0].col, 1);
}

TEST(PlacedShapes, NumberingIsContentMonotonePerPage) {
  for (long k = 1; k <= 4; ++k) {
    for (const SkewShape& sh : skew_shapes_with(k)) {
      PlacedShape s({PageRef{Scalar::one(), sh}});
      for (long b = 1; b < s.box_count(); ++b)
        EXPECT_GE(s.boxes()[b].diag(), s.boxes()[b - 1].diag());
    }
  }
}

TEST(PlacedShapes, PageOrderIsCanonical) {
  SkewShape row(Partition({2}), Partition());
  SkewShape col(Partition({1, 1}), Partition());
  PlacedShape a({PageRef{Scalar::one(), row}, PageRef{Scalar::q(3), col}});
  PlacedShape b({PageRef{Scalar::q(3), col}, PageRef{Scalar::one(), row}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.pages()[0].token, Scalar::one());
  // Two-page book with tokens 1 and q: contents live on integer and
  // half-integer diagonals respectively.
  PlacedShape book({PageRef{Scalar::q(1), col}, PageRef{Scalar::one(), row}});
  EXPECT_EQ(book.pages()[0].token, Scalar::one());
  EXPECT_EQ(book.pages()[1].token, Scalar::q(1));
  // Boxes on the q-token page are numbered by ascending diagonal: the
  // column foot (2,1) has content q * q^-2.
  EXPECT_EQ(book.content(2), Scalar::q(-1));
  EXPECT_EQ(book.content(3), Scalar::q(1));
}

TEST(PlacedShapes, NwCorners) {
  PlacedShape s = single_page(Scalar::one(), {2, 2}, {1});
  // Boxes: (2,1) diag -1, (2,2) diag 0, (1,2) diag 1; corners are (2,1), (1,2).
  auto corners = s.nw_corners();
  ASSERT_EQ(corners.size(), 2u);
  EXPECT_EQ(s.boxes()[corners[0]].row, 2);
  EXPECT_EQ(s.boxes()[corners[0]].col, 1);
  EXPECT_EQ(s.boxes()[corners[1]].row, 1);
  EXPECT_EQ(s.boxes()[corners[1]].col, 2);
  // A straight shape has a single NW corner at (1,1).
  PlacedShape p = single_page(Scalar::one(), {3, 1});
  EXPECT_EQ(p.nw_corners().size(), 1u);
}

TEST(Tableaux, CountsAgainstBruteForce) {
  for (long k = 1; k <= 4; ++k) {
    for (const SkewShape& sh : skew_shapes_with(k)) {
      PlacedShape s({PageRef{Scalar::one(), sh}});
      EXPECT_EQ(static_cast<long>(standard_tableaux(s).size()), brute_force_standard_count(s));
    }
  }
  // A sample of two-page books.
  SkewShape row2(Partition({2}), Partition());
  SkewShape col2(Partition({1, 1}), Partition());
  SkewShape hook(Partition({2, 1}), Partition());
  for (const SkewShape& a : {row2, col2, hook})
    for (const SkewShape& b : {row2, col2}) {
      PlacedShape s({PageRef{Scalar::one(), a}, PageRef{Scalar::q(3), b}});
      EXPECT_EQ(static_cast<long>(standard_tableaux(s).size()), brute_force_standard_count(s));
    }
}

TEST(Tableaux, FrozenCounts) {
  EXPECT_EQ(standard_tableaux(single_page(Scalar::one(), {2, 1})).size(), 2u);
  EXPECT_EQ(standard_tableaux(single_page(Scalar::one(), {2, 2})).size(), 2u);
  EXPECT_EQ(standard_tableaux(single_page(Scalar::one(), {3, 2, 1})).size(), 16u);
  EXPECT_EQ(standard_tableaux(single_page(Scalar::one(), {2, 2}, {1})).size(), 2u);
  // Book with pages (2) and (1): binomial(3,2) fillings.
  PlacedShape book({PageRef{Scalar::one(), SkewShape(Partition({2}), Partition())},
                    PageRef{Scalar::q(3), SkewShape(Partition({1}), Partition())}});
  EXPECT_EQ(standard_tableaux(book).size(), 3u);
}

TEST(Tableaux, TranspositionValidity) {
  PlacedShape s = single_page(Scalar::one(), {2, 1});
  auto tabs = standard_tableaux(s);
  ASSERT_EQ(tabs.size(), 2u);
  StandardTableau swapped;
  // Swapping entries 2,3 exchanges the two tableaux.
  EXPECT_TRUE(apply_transposition(s, tabs[0], 3, swapped));
  EXPECT_TRUE(swapped == tabs[0] || swapped == tabs[1]);
  EXPECT_NE(swapped, tabs[0]);
  // Swapping entries 1,2 breaks standardness on one of them: entry 1 and 2
  // share a row or column in every standard filling of (2,1).
  EXPECT_FALSE(apply_transposition(s, tabs[0], 2, swapped));
}

TEST(Tableaux, JsonRoundTrip) {
  PlacedShape s = single_page(Scalar::q(-4), {9, 7, 7, 4, 2, 1}, {5, 4, 4, 3});
  Json js = s.to_json();
  PlacedShape s2 = PlacedShape::from_json(js);
  EXPECT_EQ(s, s2);
  auto tabs = standard_tableaux(s);
  StandardTableau t = tabs.front();
  StandardTableau t2 = tableau_from_json(s, tableau_to_json(s, t));
  EXPECT_EQ(t, t2);
}

TEST(Symmetry, ApplyGAndInertia) {
  CycRat xi(-1);  // order-2 symmetry
  PlacedShape one_page = single_page(Scalar::q(3), {1});
  PlacedShape moved = one_page.applied_g(xi);
  EXPECT_EQ(moved.pages()[0].token, -Scalar::q(3));
  EXPECT_EQ(one_page.applied_g(xi, 2), one_page);
  Inertia in1 = one_page.inertia(2, xi);
  EXPECT_EQ(in1.kappa, 2);
  EXPECT_EQ(in1.group_order, 1);

  SkewShape box(Partition({1}), Partition());
  PlacedShape pair({PageRef{Scalar::one(), box}, PageRef{Scalar(-1), box}});
  Inertia in2 = pair.inertia(2, xi);
  EXPECT_EQ(in2.kappa, 1);
  EXPECT_EQ(in2.group_order, 2);

  // Unequal page shapes break the symmetry: kappa = 2.
  PlacedShape uneven({PageRef{Scalar::one(), SkewShape(Partition({2}), Partition())},
                      PageRef{Scalar(-1), box}});
  EXPECT_EQ(uneven.inertia(2, xi).kappa, 2);
}

TEST(Enumeration, SkewShapeFamilies) {
  EXPECT_EQ(skew_shapes_with(1).size(), 1u);
  // Two boxes inside a 2 x 2 bounding box: row, column, the detached
  // diagonal pair, and the row/column presentations pushed off the main
  // diagonal ((2,2)/(2) and (2,2)/(1,1)), which carry different contents.
  EXPECT_EQ(skew_shapes_with(2).size(), 5u);
  for (long k = 1; k <= 4; ++k) {
    for (const SkewShape& sh : skew_shapes_with(k)) EXPECT_EQ(sh.box_count(), k);
    // No duplicates after normalization.
    std::vector<std::string> keys;
    for (const SkewShape& sh : skew_shapes_with(k)) {
      PlacedShape s({PageRef{Scalar::one(), sh}});
      std::string key;
      for (const auto& b : s.boxes()) key += std::to_string(b.row) + "," + std::to_string(b.col) + ";";
      keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
  }
}

TEST(Enumeration, BooksOverTokens) {
  auto books = books_over_tokens(2, {Scalar::one(), Scalar(-1)});
  // Single page with token 1, single page with token -1 (5 two-box shapes
  // each), and the two-page book (1),(1): 5 + 5 + 1.
  EXPECT_EQ(books.size(), 11u);
  for (const auto& b : books) EXPECT_EQ(b.box_count(), 2);
}

}  // namespace
