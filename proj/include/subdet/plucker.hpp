#pragma once

// Quadratic determinant identities ("extended Plucker relations") and the
// quantitative exchange inequality. Everything here is exact-rational; the
// point of these routines is verification, and verification tolerates no
// rounding.
//
// Identities are evaluated in a canonical frame: the rows of S u T are
// embedded into positions {0,..,2k-1} as
//
//   common rows      -> 0 .. r-1
//   rows only in S   -> r .. k-1
//   (zero-filled gap)   k .. k+r-1      never referenced by any term
//   rows only in T   -> k+r .. 2k-1
//
// and likewise for columns with c = |S_c ∩ T_c|. The embedding permutes rows
// and columns, so det(B_{S*}) = sign_s * det(A_S) for a tracked permutation
// sign (likewise T); residuals are reported in the canonical frame. Working
// canonically removes an entire class of sign errors: the identity
// coefficients below are stated for exactly this layout.
//
// With the s-term sums (prefactors included)
//
//   s1  = (-1)^(r+c)  Σ delta^({i,i'},{j,j'}) [SΔ{i,i'},{j,j'}][TΔ{i,i'},{j,j'}]
//   s2  = (-1)^(k-r)  Σ delta^({i,i'},∅) [S_rΔ{i,i'},S_c][T_rΔ{i,i'},T_c]
//   ŝ2  = (-1)^(k-c)  Σ delta^(∅,{j,j'}) [S_r,S_cΔ{j,j'}][T_r,T_cΔ{j,j'}]
//   s3  =             Σ_{i<h,i'<h'} delta^({i,h,i',h'},∅) [..][..]
//   ŝ3  =             Σ_{j<l,j'<l'} delta^(∅,{j,l,j',l'}) [..][..]
//
// (unprimed indices ranging over S's side of the symmetric difference,
// primed over T's side) the verified relations are
//
//   combined:  2 s1 - 2(k-1+r-2c) ŝ2 - 2(k-1+c-2r) s2 - 4(s3+ŝ3)
//                = ((k-r)^2 + (k-c)^2 + (r-c)^2) [S][T]
//   disjoint (r=c=0):  s1 - 2(k-1) s2 - 4 s3 = k^2 [S][T]
//   row form:  s1 - r ŝ2 - (2(k-1)+c-4r) s2 - 4 s3
//                = (k^2 - 2(k-1)r + 4 C(r,2) - rc) [S][T]
//
// The exchange inequality needs no canonical frame (it compares absolute
// values only):  |det(A_S) det(A_T)| <= (2k^2+8k) * max_{U in E(S,T)}
// |det(A_{SΔU}) det(A_{TΔU})|.

#include <string>
#include <vector>

#include "subdet/det.hpp"
#include "subdet/exchange.hpp"
#include "subdet/index_pair.hpp"
#include "subdet/matrix.hpp"

namespace subdet {

struct STerms {
  Rational s1, s2, s2_hat, s3, s3_hat;
  int k = 0, r = 0, c = 0;
};

// One exchange term of an identity, for failure diagnosis: the raw signed
// product delta^U [SΔU][TΔU] (canonical frame, original index labels), or the
// absolute product for the exchange inequality.
struct TermLog {
  std::string family;  // "E1", "E2", "E2^", "E3", "E3^"
  Exchange u;
  Rational value;
};

struct IdentityReport {
  std::string identity;
  int k = 0, r = 0, c = 0;
  // For the plucker identities lhs/rhs are stated in the canonical frame, so
  // each differs from its original-frame value by the joint embedding sign;
  // residual and holds are frame-independent. The exchange inequality works
  // in absolute values and has no frame.
  Rational lhs, rhs, residual;
  bool holds = false;
  Rational gamma;  // exchange inequality only: max |det(A_SΔU) det(A_TΔU)|
  std::vector<TermLog> terms;
};

namespace detail {

struct Canonical {
  Matrix<Rational> b;
  IndexPair s, t;                        // canonical positions
  int sign_s = 1, sign_t = 1;            // det(b_s) = sign_s * det(a_S), same for t
  std::vector<int> row_origin, col_origin;  // canonical position -> original index, -1 = gap
  int k = 0, r = 0, c = 0;
};

inline int permutation_parity_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

inline Canonical canonicalize(const Matrix<Rational>& a, const IndexPair& s, const IndexPair& t) {
  validate_index_pair(s, a.rows(), a.cols());
  validate_index_pair(t, a.rows(), a.cols());
  if (s.k() != t.k() || s.k() == 0)
    throw std::invalid_argument("canonicalize: index pairs must share a positive order");
  Canonical out{Matrix<Rational>::zero(1, 1), {}, {}, 1, 1, {}, {}, 0, 0, 0};
  const int k = static_cast<int>(s.k());
  out.k = k;

  // position[original index] for one coordinate; returns the overlap size.
  const auto place = [k](const std::vector<int>& sv, const std::vector<int>& tv,
                         std::vector<int>& origin) {
    const auto common = set_and(sv, tv);
    const auto s_only = set_minus(sv, tv);
    const auto t_only = set_minus(tv, sv);
    const int ov = static_cast<int>(common.size());
    origin.assign(static_cast<std::size_t>(2 * k), -1);
    std::vector<std::pair<int, int>> pos;  // (original, canonical)
    for (int i = 0; i < ov; ++i) pos.emplace_back(common[static_cast<std::size_t>(i)], i);
    for (std::size_t i = 0; i < s_only.size(); ++i)
      pos.emplace_back(s_only[i], ov + static_cast<int>(i));
    for (std::size_t i = 0; i < t_only.size(); ++i)
      pos.emplace_back(t_only[i], k + ov + static_cast<int>(i));
    for (auto [orig, canon] : pos) origin[static_cast<std::size_t>(canon)] = orig;
    return std::make_pair(pos, ov);
  };

  auto [row_pos, r] = place(s.rows, t.rows, out.row_origin);
  auto [col_pos, c] = place(s.cols, t.cols, out.col_origin);
  out.r = r;
  out.c = c;

  std::vector<Rational> entries(static_cast<std::size_t>(4 * k * k), Rational(0));
  for (auto [ri, rp] : row_pos)
    for (auto [cj, cp] : col_pos)
      entries[static_cast<std::size_t>(rp) * static_cast<std::size_t>(2 * k) +
              static_cast<std::size_t>(cp)] =
          a(static_cast<std::size_t>(ri), static_cast<std::size_t>(cj));
  out.b = Matrix<Rational>(static_cast<std::size_t>(2 * k), static_cast<std::size_t>(2 * k),
                           std::move(entries));

  // Permutation sign between sorted original indices and canonical order.
  const auto side_sign = [](const std::vector<int>& sorted_set,
                            const std::vector<std::pair<int, int>>& pos) {
    std::vector<int> seq;
    for (int x : sorted_set)
      for (auto [orig, canon] : pos)
        if (orig == x) seq.push_back(canon);
    return permutation_parity_sign(seq);
  };

  std::vector<int> srows(static_cast<std::size_t>(k)), scols(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) srows[static_cast<std::size_t>(i)] = i;
  scols = srows;
  std::vector<int> trows, tcols;
  for (int i = 0; i < r; ++i) trows.push_back(i);
  for (int i = k + r; i < 2 * k; ++i) trows.push_back(i);
  for (int j = 0; j < c; ++j) tcols.push_back(j);
  for (int j = k + c; j < 2 * k; ++j) tcols.push_back(j);
  out.s = IndexPair{srows, scols};
  out.t = IndexPair{trows, tcols};
  out.sign_s = side_sign(s.rows, row_pos) * side_sign(s.cols, col_pos);
  out.sign_t = side_sign(t.rows, row_pos) * side_sign(t.cols, col_pos);
  return out;
}

// Copies the canonical S-rows/columns shared with T into the zero-filled gap
// positions, producing the disjoint lift: S* = ({0..k-1},{0..k-1}) and
// T* = ({k..2k-1},{k..2k-1}) select submatrices with det(T*) = +-det(T).
// Used by tests to cross-check the general identity against the disjoint one.
inline Matrix<Rational> lift_copied(const Canonical& cn) {
  const int k = cn.k, r = cn.r, c = cn.c;
  const auto n = static_cast<std::size_t>(2 * k);
  std::vector<Rational> e = cn.b.entries();
  for (int i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e[static_cast<std::size_t>(k + i) * n + j] = e[static_cast<std::size_t>(i) * n + j];
  for (int j = 0; j < c; ++j)
    for (std::size_t i = 0; i < n; ++i)
      e[i * n + static_cast<std::size_t>(k + j)] = e[i * n + static_cast<std::size_t>(j)];
  return Matrix<Rational>(n, n, std::move(e));
}

struct STermsDetail {
  STerms sums;
  Rational det_s, det_t;  // signed canonical-frame determinants
  std::vector<TermLog> terms;
};

inline STermsDetail s_terms_canonical(const Canonical& cn, bool collect_terms) {
  const int k = cn.k, r = cn.r, c = cn.c;
  STermsDetail out;
  out.sums.k = k;
  out.sums.r = r;
  out.sums.c = c;
  out.sums.s1 = out.sums.s2 = out.sums.s2_hat = out.sums.s3 = out.sums.s3_hat = Rational(0);
  out.det_s = det_sub(cn.b, cn.s).value();
  out.det_t = det_sub(cn.b, cn.t).value();

  const auto val = [&](const Exchange& u) {
    const Rational prod = det_sub(cn.b, apply_exchange(cn.s, u)).value() *
                          det_sub(cn.b, apply_exchange(cn.t, u)).value();
    return Rational(sign_delta(u, cn.s, cn.t)) * prod;
  };
  const auto log_term = [&](const char* family, const Exchange& u, const Rational& v) {
    if (!collect_terms) return;
    Exchange orig;
    for (int x : u.rows) orig.rows.push_back(cn.row_origin[static_cast<std::size_t>(x)]);
    for (int x : u.cols) orig.cols.push_back(cn.col_origin[static_cast<std::size_t>(x)]);
    std::sort(orig.rows.begin(), orig.rows.end());
    std::sort(orig.cols.begin(), orig.cols.end());
    out.terms.push_back(TermLog{family, std::move(orig), v});
  };

  // Canonical-frame sides of the symmetric differences.
  std::vector<int> rs, rt, csd, ctd;
  for (int i = r; i < k; ++i) rs.push_back(i);
  for (int i = k + r; i < 2 * k; ++i) rt.push_back(i);
  for (int j = c; j < k; ++j) csd.push_back(j);
  for (int j = k + c; j < 2 * k; ++j) ctd.push_back(j);

  for (int i : rs)
    for (int ip : rt)
      for (int j : csd)
        for (int jp : ctd) {
          const Exchange u{{i, ip}, {j, jp}};
          const Rational v = val(u);
          out.sums.s1 += v;
          log_term("E1", u, v);
        }
  for (int i : rs)
    for (int ip : rt) {
      const Exchange u{{i, ip}, {}};
      const Rational v = val(u);
      out.sums.s2 += v;
      log_term("E2", u, v);
    }
  for (int j : csd)
    for (int jp : ctd) {
      const Exchange u{{}, {j, jp}};
      const Rational v = val(u);
      out.sums.s2_hat += v;
      log_term("E2^", u, v);
    }
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = a + 1; b < rs.size(); ++b)
      for (std::size_t ap = 0; ap < rt.size(); ++ap)
        for (std::size_t bp = ap + 1; bp < rt.size(); ++bp) {
          const Exchange u{{rs[a], rs[b], rt[ap], rt[bp]}, {}};
          const Rational v = val(u);
          out.sums.s3 += v;
          log_term("E3", u, v);
        }
  for (std::size_t a = 0; a < csd.size(); ++a)
    for (std::size_t b = a + 1; b < csd.size(); ++b)
      for (std::size_t ap = 0; ap < ctd.size(); ++ap)
        for (std::size_t bp = ap + 1; bp < ctd.size(); ++bp) {
          const Exchange u{{}, {csd[a], csd[b], ctd[ap], ctd[bp]}};
          const Rational v = val(u);
          out.sums.s3_hat += v;
          log_term("E3^", u, v);
        }

  const int pf1 = (r + c) % 2 == 0 ? 1 : -1;
  const int pf2 = (k - r) % 2 == 0 ? 1 : -1;
  const int pf2h = (k - c) % 2 == 0 ? 1 : -1;
  out.sums.s1 *= pf1;
  out.sums.s2 *= pf2;
  out.sums.s2_hat *= pf2h;
  return out;
}

inline void require_distinct(const IndexPair& s, const IndexPair& t) {
  if (s == t) throw std::invalid_argument("identity verification requires S != T");
}

}  // namespace detail

// The five s-term sums in the canonical frame (prefactors included).
inline STerms s_terms(const Matrix<Rational>& a, const IndexPair& s, const IndexPair& t) {
  detail::require_distinct(s, t);
  return detail::s_terms_canonical(detail::canonicalize(a, s, t), false).sums;
}

// Disjoint-case identity: s1 - 2(k-1) s2 - 4 s3 = k^2 [S][T]. Requires
// disjoint rows and columns (r = c = 0).
inline IdentityReport verify_disjoint_identity(const Matrix<Rational>& a, const IndexPair& s,
                                               const IndexPair& t) {
  detail::require_distinct(s, t);
  const auto cn = detail::canonicalize(a, s, t);
  if (cn.r != 0 || cn.c != 0)
    throw std::invalid_argument("disjoint identity requires disjoint index pairs");
  const auto st = detail::s_terms_canonical(cn, true);
  IdentityReport rep;
  rep.identity = "plucker-disjoint";
  rep.k = cn.k;
  rep.r = 0;
  rep.c = 0;
  const int k = cn.k;
  rep.lhs = st.sums.s1 - Rational(2 * (k - 1)) * st.sums.s2 - Rational(4) * st.sums.s3;
  rep.rhs = Rational(k * k) * st.det_s * st.det_t;
  rep.residual = rep.lhs - rep.rhs;
  rep.holds = rep.residual == 0;
  rep.terms = st.terms;
  return rep;
}

// Combined general-position identity (arbitrary overlaps r, c with S != T):
// 2 s1 - 2(k-1+r-2c) ŝ2 - 2(k-1+c-2r) s2 - 4(s3+ŝ3) = M [S][T],
// M = (k-r)^2 + (k-c)^2 + (r-c)^2.
inline IdentityReport verify_general_identity(const Matrix<Rational>& a, const IndexPair& s,
                                              const IndexPair& t) {
  detail::require_distinct(s, t);
  const auto cn = detail::canonicalize(a, s, t);
  const auto st = detail::s_terms_canonical(cn, true);
  const int k = cn.k, r = cn.r, c = cn.c;
  IdentityReport rep;
  rep.identity = "plucker-general";
  rep.k = k;
  rep.r = r;
  rep.c = c;
  rep.lhs = Rational(2) * st.sums.s1 - Rational(2 * (k - 1 + r - 2 * c)) * st.sums.s2_hat -
            Rational(2 * (k - 1 + c - 2 * r)) * st.sums.s2 -
            Rational(4) * (st.sums.s3 + st.sums.s3_hat);
  const int m = (k - r) * (k - r) + (k - c) * (k - c) + (r - c) * (r - c);
  rep.rhs = Rational(m) * st.det_s * st.det_t;
  rep.residual = rep.lhs - rep.rhs;
  rep.holds = rep.residual == 0;
  rep.terms = st.terms;
  return rep;
}

// Optional extra check: the row-sided relation
// s1 - r ŝ2 - (2(k-1)+c-4r) s2 - 4 s3 = (k^2 - 2(k-1)r + 4 C(r,2) - rc) [S][T].
inline IdentityReport verify_general_row_identity(const Matrix<Rational>& a, const IndexPair& s,
                                                  const IndexPair& t) {
  detail::require_distinct(s, t);
  const auto cn = detail::canonicalize(a, s, t);
  const auto st = detail::s_terms_canonical(cn, true);
  const int k = cn.k, r = cn.r, c = cn.c;
  IdentityReport rep;
  rep.identity = "plucker-general-row";
  rep.k = k;
  rep.r = r;
  rep.c = c;
  rep.lhs = st.sums.s1 - Rational(r) * st.sums.s2_hat -
            Rational(2 * (k - 1) + c - 4 * r) * st.sums.s2 - Rational(4) * st.sums.s3;
  const int coef = k * k - 2 * (k - 1) * r + 4 * (r * (r - 1) / 2) - r * c;
  rep.rhs = Rational(coef) * st.det_s * st.det_t;
  rep.residual = rep.lhs - rep.rhs;
  rep.holds = rep.residual == 0;
  rep.terms = st.terms;
  return rep;
}

// Quantitative exchange inequality, verified on the original matrix:
// |det(A_S) det(A_T)| <= (2k^2+8k) * gamma. Terms log the absolute products.
inline IdentityReport verify_exchange_inequality(const Matrix<Rational>& a, const IndexPair& s,
                                                 const IndexPair& t) {
  detail::require_distinct(s, t);
  validate_index_pair(s, a.rows(), a.cols());
  validate_index_pair(t, a.rows(), a.cols());
  if (s.k() != t.k() || s.k() == 0)
    throw std::invalid_argument("exchange inequality requires equal positive order");
  const int k = static_cast<int>(s.k());
  IdentityReport rep;
  rep.identity = "exchange-inequality";
  rep.k = k;
  rep.r = static_cast<int>(detail::set_and(s.rows, t.rows).size());
  rep.c = static_cast<int>(detail::set_and(s.cols, t.cols).size());

  const Rational ds = det_sub(a, s).value(), dt = det_sub(a, t).value();
  rep.lhs = abs(ds * dt);
  rep.gamma = Rational(0);
  const auto family_of = [&](const Exchange& u) -> const char* {
    if (!u.rows.empty() && !u.cols.empty()) return "E1";
    if (u.rows.size() == 2) return "E2";
    if (u.cols.size() == 2) return "E2^";
    return u.rows.size() == 4 ? "E3" : "E3^";
  };
  for (const Exchange& u : exchanges(s, t)) {
    const Rational prod =
        abs(det_sub(a, apply_exchange(s, u)).value() * det_sub(a, apply_exchange(t, u)).value());
    if (prod > rep.gamma) rep.gamma = prod;
    rep.terms.push_back(TermLog{family_of(u), u, prod});
  }
  rep.rhs = Rational(2 * k * k + 8 * k) * rep.gamma;
  rep.residual = rep.lhs - rep.rhs;
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

}  // namespace subdet
