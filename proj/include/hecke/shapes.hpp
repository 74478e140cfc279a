#pragma once

/*
 * Placed skew shapes and their standard tableaux.
 *
 * A placed shape is a finite book of pages; each page carries a nonzero
 * token (a Scalar) and a skew shape lambda/mu.  A box b on a page with
 * token t represents the content value "q^(2c(b)) = t * q^(2 diag(b))"
 * with diag(b) = col - row; no transcendental content ever appears, only
 * these token-weighted powers of q.  Tokens of distinct pages must stay
 * separated: x != y * q^(2k) for all |k| <= n, so cross-page content
 * ratios never degenerate into integer powers of q^2.
 *
 * Canonical box numbering: pages in canonical token order, inside a page
 * by ascending diagonal, northwest to southeast along each diagonal.
 * The numbering is a function of the box multiset only, so rebuilding a
 * shape from reordered input pages reproduces it exactly.
 */

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "hecke/error.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

using Json = nlohmann::json;

// Shortlex on strings: by length, then lexicographically.  Used for every
// canonical ordering that is defined on serialized values.
inline bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}
inline bool shortlex_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return shortlex_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

struct Partition {
  Partition() = default;
  explicit Partition(std::vector<long> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      require(parts[i] > 0, errc::invalid_argument, "partition parts must be positive");
      require(i == 0 || parts[i - 1] >= parts[i], errc::invalid_argument,
              "partition parts must be weakly decreasing");
    }
  }

  std::vector<long> parts;

  long size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
  }
  long rows() const { return static_cast<long>(parts.size()); }
  long row_length(long r) const {  // 1-based row
    return r >= 1 && r <= rows() ? parts[r - 1] : 0;
  }
  bool empty() const { return parts.empty(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
};

struct SkewShape {
  SkewShape() = default;
  SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    require(inner.rows() <= outer.rows(), errc::not_contained, "inner partition has more rows than outer");
    for (long r = 1; r <= inner.rows(); ++r)
      require(inner.row_length(r) <= outer.row_length(r), errc::not_contained,
              "inner partition is not contained in outer");
  }

  Partition outer, inner;

  long box_count() const { return outer.size() - inner.size(); }
  bool has_box(long row, long col) const {
    return row >= 1 && row <= outer.rows() && col > inner.row_length(row) && col <= outer.row_length(row);
  }

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.outer == b.outer && a.inner == b.inner;
  }
  friend bool operator!=(const SkewShape& a, const SkewShape& b) { return !(a == b); }
};

struct PageRef {
  Scalar token;
  SkewShape shape;
};

struct BoxCoord {
  long page;  // index into the canonical page list
  long row, col;  // 1-based within the page's outer partition
  long diag() const { return col - row; }
};

struct Inertia {
  long kappa;        // least power of g fixing the shape
  long group_order;  // |K| = p / kappa
};

class PlacedShape {
 public:
  explicit PlacedShape(std::vector<PageRef> pages) {
    require(!pages.empty(), errc::empty_shape, "placed shape needs at least one page");
    for (const auto& pg : pages) {
      require(!pg.token.is_zero(), errc::zero_token, "page token must be nonzero");
      require(pg.shape.box_count() >= 1, errc::empty_shape, "every page must carry at least one box");
    }
    std::sort(pages.begin(), pages.end(), [](const PageRef& a, const PageRef& b) {
      return shortlex_less(a.token.to_string(), b.token.to_string());
    });
    pages_ = std::move(pages);
    number_boxes();
    long n = box_count();
    for (std::size_t a = 0; a < pages_.size(); ++a)
      for (std::size_t b = a + 1; b < pages_.size(); ++b)
        for (long k = -n; k <= n; ++k)
          require(pages_[a].token != pages_[b].token * Scalar::q(2 * k), errc::page_collision,
                  "page tokens differ by q^(2k) with |k| <= n");
  }

  long box_count() const { return static_cast<long>(boxes_.size()); }
  const std::vector<PageRef>& pages() const { return pages_; }
  const std::vector<BoxCoord>& boxes() const { return boxes_; }

  // q^(2c(b)) for box index b.
  Scalar content(long b) const {
    const BoxCoord& bx = boxes_[b];
    return pages_[bx.page].token * Scalar::q(2 * bx.diag());
  }

  long box_index(long page, long row, long col) const {
    auto it = index_.find(std::make_tuple(page, row, col));
    return it == index_.end() ? -1 : it->second;
  }
  long left_neighbor(long b) const { return left_[b]; }
  long up_neighbor(long b) const { return up_[b]; }

  std::vector<long> nw_corners() const {
    std::vector<long> out;
    for (long b = 0; b < box_count(); ++b)
      if (left_[b] < 0 && up_[b] < 0) out.push_back(b);
    return out;
  }

  friend bool operator==(const PlacedShape& a, const PlacedShape& b) {
    if (a.pages_.size() != b.pages_.size()) return false;
    for (std::size_t i = 0; i < a.pages_.size(); ++i) {
      if (a.pages_[i].token != b.pages_[i].token) return false;
      if (a.pages_[i].shape != b.pages_[i].shape) return false;
    }
    return true;
  }
  friend bool operator!=(const PlacedShape& a, const PlacedShape& b) { return !(a == b); }

  // The order-p symmetry multiplies every token by xi^(-steps); shapes ride
  // along unchanged.
  PlacedShape applied_g(const CycRat& xi, long steps = 1) const {
    std::vector<PageRef> pgs = pages_;
    Scalar f = Scalar::from_cyc(xi.pow(-steps));
    for (auto& pg : pgs) pg.token = pg.token * f;
    return PlacedShape(std::move(pgs));
  }

  Inertia inertia(long p, const CycRat& xi) const {
    for (long k = 1; k <= p; ++k) {
      if (applied_g(xi, k) == *this) {
        require(p % k == 0, errc::invalid_argument, "inertia step does not divide the symmetry order");
        return Inertia{k, p / k};
      }
    }
    fail(errc::not_inertial, "no power of the symmetry fixes the shape");
  }

  Json to_json() const {
    Json pages = Json::array();
    for (const auto& pg : pages_) {
      Json jp;
      jp["token"] = pg.token.to_string();
      jp["outer"] = pg.shape.outer.parts;
      jp["inner"] = pg.shape.inner.parts;
      pages.push_back(std::move(jp));
    }
    return Json{{"pages", std::move(pages)}};
  }

  static PlacedShape from_json(const Json& j, long zeta_order = 1) {
    require(j.contains("pages") && j["pages"].is_array(), errc::parse_error,
            "placed shape JSON needs a pages array");
    std::vector<PageRef> pages;
    for (const auto& jp : j["pages"]) {
      require(jp.contains("token") && jp.contains("outer"), errc::parse_error,
              "page JSON needs token and outer");
      Scalar token = parse_scalar(jp["token"].get<std::string>(), zeta_order);
      Partition outer(jp["outer"].get<std::vector<long>>());
      Partition inner(jp.contains("inner") ? jp["inner"].get<std::vector<long>>() : std::vector<long>{});
      pages.push_back(PageRef{std::move(token), SkewShape(std::move(outer), std::move(inner))});
    }
    return PlacedShape(std::move(pages));
  }

 private:
  void number_boxes() {
    boxes_.clear();
    for (std::size_t p = 0; p < pages_.size(); ++p) {
      std::vector<BoxCoord> page_boxes;
      const SkewShape& sh = pages_[p].shape;
      for (long r = 1; r <= sh.outer.rows(); ++r)
        for (long c = sh.inner.row_length(r) + 1; c <= sh.outer.row_length(r); ++c)
          page_boxes.push_back(BoxCoord{static_cast<long>(p), r, c});
      std::sort(page_boxes.begin(), page_boxes.end(), [](const BoxCoord& a, const BoxCoord& b) {
        if (a.diag() != b.diag()) return a.diag() < b.diag();
        return a.row < b.row;
      });
      boxes_.insert(boxes_.end(), page_boxes.begin(), page_boxes.end());
    }
    index_.clear();
    for (std::size_t i = 0; i < boxes_.size(); ++i)
      index_[std::make_tuple(boxes_[i].page, boxes_[i].row, boxes_[i].col)] = static_cast<long>(i);
    left_.assign(boxes_.size(), -1);
    up_.assign(boxes_.size(), -1);
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      left_[i] = box_index(boxes_[i].page, boxes_[i].row, boxes_[i].col - 1);
      up_[i] = box_index(boxes_[i].page, boxes_[i].row - 1, boxes_[i].col);
    }
  }

  std::vector<PageRef> pages_;
  std::vector<BoxCoord> boxes_;
  std::map<std::tuple<long, long, long>, long> index_;
  std::vector<long> left_, up_;
};

// A standard tableau on a placed shape: entries 1..n fill the boxes,
// increasing along rows and down columns of every page.
struct StandardTableau {
  std::vector<long> box_of_entry;  // box index of entry i at position i-1

  long size() const { return static_cast<long>(box_of_entry.size()); }
  long entry_of_box(long b) const {
    for (std::size_t i = 0; i < box_of_entry.size(); ++i)
      if (box_of_entry[i] == b) return static_cast<long>(i) + 1;
    return -1;
  }
  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.box_of_entry == b.box_of_entry;
  }
  friend bool operator!=(const StandardTableau& a, const StandardTableau& b) { return !(a == b); }
};

inline bool is_standard(const PlacedShape& s, const StandardTableau& t) {
  long n = s.box_count();
  if (t.size() != n) return false;
  std::vector<long> entry_at(n, 0);
  for (long i = 0; i < n; ++i) {
    long b = t.box_of_entry[i];
    if (b < 0 || b >= n || entry_at[b] != 0) return false;
    entry_at[b] = i + 1;
  }
  for (long b = 0; b < n; ++b) {
    if (s.left_neighbor(b) >= 0 && entry_at[s.left_neighbor(b)] > entry_at[b]) return false;
    if (s.up_neighbor(b) >= 0 && entry_at[s.up_neighbor(b)] > entry_at[b]) return false;
  }
  return true;
}

// All standard tableaux, generated by filling entries 1..n into boxes whose
// west and north neighbors are already filled.
inline std::vector<StandardTableau> standard_tableaux(const PlacedShape& s) {
  long n = s.box_count();
  std::vector<StandardTableau> out;
  std::vector<long> filled(n, 0);
  StandardTableau cur;
  cur.box_of_entry.assign(n, -1);
  auto rec = [&](auto&& self, long next) -> void {
    if (next > n) {
      out.push_back(cur);
      return;
    }
    for (long b = 0; b < n; ++b) {
      if (filled[b]) continue;
      if (s.left_neighbor(b) >= 0 && !filled[s.left_neighbor(b)]) continue;
      if (s.up_neighbor(b) >= 0 && !filled[s.up_neighbor(b)]) continue;
      filled[b] = 1;
      cur.box_of_entry[next - 1] = b;
      self(self, next + 1);
      filled[b] = 0;
    }
  };
  rec(rec, 1);
  return out;
}

// Content sequence q^(2 c(L(1))), ..., q^(2 c(L(n))).
inline std::vector<Scalar> contents_of(const PlacedShape& s, const StandardTableau& t) {
  std::vector<Scalar> out;
  out.reserve(t.size());
  for (long b : t.box_of_entry) out.push_back(s.content(b));
  return out;
}

// Swap of the entries i-1 and i; returns false when the swapped filling is
// not standard (the two boxes are row- or column-adjacent).
inline bool apply_transposition(const PlacedShape& s, const StandardTableau& t, long i,
                                StandardTableau& out) {
  require(i >= 2 && i <= t.size(), errc::invalid_argument, "transposition index out of range");
  out = t;
  std::swap(out.box_of_entry[i - 2], out.box_of_entry[i - 1]);
  return is_standard(s, out);
}

inline Json tableau_to_json(const PlacedShape& s, const StandardTableau& t) {
  Json entries = Json::array();
  for (long i = 1; i <= t.size(); ++i) {
    const BoxCoord& b = s.boxes()[t.box_of_entry[i - 1]];
    entries.push_back(Json{{"page", b.page}, {"row", b.row}, {"col", b.col}, {"value", i}});
  }
  return Json{{"entries", std::move(entries)}};
}

inline StandardTableau tableau_from_json(const PlacedShape& s, const Json& j) {
  require(j.contains("entries") && j["entries"].is_array(), errc::parse_error,
          "tableau JSON needs an entries array");
  StandardTableau t;
  t.box_of_entry.assign(s.box_count(), -1);
  require(static_cast<long>(j["entries"].size()) == s.box_count(), errc::parse_error,
          "tableau entry count does not match the shape");
  for (const auto& je : j["entries"]) {
    long b = s.box_index(je["page"].get<long>(), je["row"].get<long>(), je["col"].get<long>());
    require(b >= 0, errc::parse_error, "tableau entry lies outside the shape");
    long v = je["value"].get<long>();
    require(v >= 1 && v <= s.box_count() && t.box_of_entry[v - 1] < 0, errc::parse_error,
            "tableau values must be a permutation of 1..n");
    t.box_of_entry[v - 1] = b;
  }
  require(is_standard(s, t), errc::invalid_argument, "tableau is not standard");
  return t;
}

// ---------------------------------------------------------------------------
// Enumeration helpers for sweep-style verification.

namespace detail {

inline void partitions_in_box(long max_part, long max_rows, std::vector<long>& cur,
                              std::vector<Partition>& out) {
  out.push_back(Partition(cur));
  if (static_cast<long>(cur.size()) == max_rows) return;
  long hi = cur.empty() ? max_part : cur.back();
  for (long p = hi; p >= 1; --p) {
    cur.push_back(p);
    partitions_in_box(max_part, max_rows, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<Partition> partitions_in_box(long max_part, long max_rows) {
  std::vector<Partition> out;
  std::vector<long> cur;
  detail::partitions_in_box(max_part, max_rows, cur, out);
  return out;
}

inline std::vector<Partition> partitions_of(long n) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_in_box(n, n))
    if (p.size() == n) out.push_back(p);
  return out;
}

// All skew shapes with exactly `boxes` boxes inside a boxes x boxes
// bounding box, deduplicated by diagonal-translation-normalized box set
// (diagonal translations preserve every content, hence the module).
inline std::vector<SkewShape> skew_shapes_with(long boxes) {
  std::vector<SkewShape> out;
  std::map<std::string, bool> seen;
  std::vector<Partition> outers = partitions_in_box(boxes, boxes);
  for (const Partition& outer : outers) {
    if (outer.size() < boxes) continue;
    std::vector<Partition> inners = partitions_in_box(outer.row_length(1), outer.rows());
    for (const Partition& inner : inners) {
      if (outer.size() - inner.size() != boxes) continue;
      bool contained = inner.rows() <= outer.rows();
      for (long r = 1; contained && r <= inner.rows(); ++r)
        contained = inner.row_length(r) <= outer.row_length(r);
      if (!contained) continue;
      SkewShape sh(outer, inner);
      // Normalize by the diagonal translation putting the box set against
      // the top or left edge.
      long min_row = boxes + 1, min_col = boxes + 1;
      std::vector<std::pair<long, long>> cells;
      for (long r = 1; r <= outer.rows(); ++r)
        for (long c = inner.row_length(r) + 1; c <= outer.row_length(r); ++c) {
          cells.emplace_back(r, c);
          min_row = std::min(min_row, r);
          min_col = std::min(min_col, c);
        }
      long t = std::min(min_row, min_col) - 1;
      std::string key;
      for (auto& [r, c] : cells) key += std::to_string(r - t) + "," + std::to_string(c - t) + ";";
      if (seen.count(key)) continue;
      seen[key] = true;
      if (t == 0) {
        out.push_back(std::move(sh));
      } else {
        std::vector<long> o2, i2;
        for (long r = t + 1; r <= outer.rows(); ++r) {
          long len = outer.row_length(r) - t;
          if (len <= 0) break;
          o2.push_back(len);
          i2.push_back(std::max(inner.row_length(r) - t, 0L));
        }
        out.push_back(SkewShape(Partition(o2), Partition(i2)));
      }
    }
  }
  return out;
}

// Every placed shape with n total boxes whose pages use a nonempty subset
// of the given tokens (each token at most once).
inline std::vector<PlacedShape> books_over_tokens(long n, const std::vector<Scalar>& tokens) {
  std::vector<std::vector<SkewShape>> shapes_by_count(n + 1);
  for (long k = 1; k <= n; ++k) shapes_by_count[k] = skew_shapes_with(k);
  std::vector<PlacedShape> out;
  long m = static_cast<long>(tokens.size());
  for (long mask = 1; mask < (1L << m); ++mask) {
    std::vector<long> used;
    for (long i = 0; i < m; ++i)
      if (mask & (1L << i)) used.push_back(i);
    // Compositions of n into |used| positive parts.
    std::vector<long> parts(used.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, long remaining) -> void {
      if (idx + 1 == used.size()) {
        parts[idx] = remaining;
        std::vector<std::size_t> pick(used.size(), 0);
        auto emit = [&](auto&& emit_self, std::size_t page) -> void {
          if (page == used.size()) {
            std::vector<PageRef> pages;
            for (std::size_t pg = 0; pg < used.size(); ++pg)
              pages.push_back(PageRef{tokens[used[pg]], shapes_by_count[parts[pg]][pick[pg]]});
            out.push_back(PlacedShape(std::move(pages)));
            return;
          }
          for (pick[page] = 0; pick[page] < shapes_by_count[parts[page]].size(); ++pick[page])
            emit_self(emit_self, page + 1);
        };
        emit(emit, 0);
        return;
      }
      for (long take = 1; take <= remaining - static_cast<long>(used.size() - idx - 1); ++take) {
        parts[idx] = take;
        self(self, idx + 1, remaining - take);
      }
    };
    if (static_cast<long>(used.size()) <= n) rec(rec, 0, n);
  }
  return out;
}

}  // namespace hecke
