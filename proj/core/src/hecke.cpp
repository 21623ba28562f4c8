#include "coboundary/hecke.hpp"

#include <algorithm>

namespace coboundary::hecke {

using algebra::LaurentPoly;
using algebra::q_int;

namespace {

RationalFunction qpow(int k) { return RationalFunction(LaurentPoly::monomial(k)); }

RationalFunction qi(int n) { return RationalFunction(q_int(n)); }

Tableau swap_entries(const Tableau& t, int i) {
  Tableau out = t;
  for (auto& row : out.rows)
    for (int& x : row) x = x == i ? i + 1 : x == i + 1 ? i : x;
  return out;
}

void check_index(const SeminormalRep& rep, int i, int lo) {
  if (i < lo || i > rep.r() - 1)
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " for H_" + std::to_string(rep.r()));
}

// Matrix with column x = diag * x + off * s_i x, for the given per-axial
// coefficient rules.
template <typename Diag, typename Off>
QMatrix seminormal(const SeminormalRep& rep, int i, Diag diag, Off off) {
  check_index(rep, i, 1);
  const std::size_t n = rep.dimension();
  QMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& cd = rep.basis()[x];
    const int a = cd.axial(i);
    m(x, x) = diag(a);
    const std::size_t y = rep.index_of(swap_entries(cd.tableau, i));
    if (y < n) m(y, x) = off(a);
  }
  return m;
}

RationalFunction off_diagonal(int a) {
  if (a > 0) return 1;
  return qi(a - 1) * qi(a + 1) / (qi(a) * qi(a));
}

}  // namespace

ContentData::ContentData(Tableau t) : tableau(std::move(t)), contents(static_cast<std::size_t>(tableau.size()), 0) {
  for (std::size_t r = 0; r < tableau.rows.size(); ++r)
    for (std::size_t c = 0; c < tableau.rows[r].size(); ++c)
      contents[static_cast<std::size_t>(tableau.rows[r][c] - 1)] = static_cast<int>(c) - static_cast<int>(r);
}

SeminormalRep::SeminormalRep(const Partition& shape) : shape_(shape), r_(shape.size()) {
  for (auto& t : oracles::all_standard(shape)) basis_.emplace_back(std::move(t));
}

std::size_t SeminormalRep::index_of(const Tableau& t) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), t,
                             [](const ContentData& cd, const Tableau& key) { return cd.tableau < key; });
  if (it == basis_.end() || !(it->tableau == t)) return basis_.size();
  return static_cast<std::size_t>(it - basis_.begin());
}

QMatrix u_matrix(const SeminormalRep& rep, int i) {
  return seminormal(
      rep, i, [](int a) { return -qi(a - 1) / qi(a); }, off_diagonal);
}

QMatrix t_matrix(const SeminormalRep& rep, int i) {
  return u_matrix(rep, i) + QMatrix::identity(rep.dimension()).scaled(qpow(1));
}

QMatrix t_inverse_matrix(const SeminormalRep& rep, int i) {
  return u_matrix(rep, i) + QMatrix::identity(rep.dimension()).scaled(qpow(-1));
}

QMatrix jm_matrix(const SeminormalRep& rep, int i, int twice_power) {
  check_index(rep, i, 0);
  if (twice_power != -2 && twice_power != -1 && twice_power != 1 && twice_power != 2)
    throw Error(ErrorCode::BadParameter, "J power must be one of -1, -1/2, 1/2, 1");
  std::vector<RationalFunction> diag;
  for (const auto& cd : rep.basis()) diag.push_back(qpow(twice_power * cd.content(i + 1)));
  return QMatrix::diagonal(diag);
}

QMatrix jm_word_product(const SeminormalRep& rep, int i) {
  check_index(rep, i, 0);
  QMatrix m = QMatrix::identity(rep.dimension());
  for (int k = i; k >= 1; --k) m = m * t_matrix(rep, k);
  for (int k = 1; k <= i; ++k) m = m * t_matrix(rep, k);
  return m;
}

QMatrix tau_matrix(const SeminormalRep& rep, int i) {
  return seminormal(
      rep, i, [](int a) { return qi(a).inverse(); }, off_diagonal);
}

QMatrix tau_word_matrix(const SeminormalRep& rep, const cactus::TauWord& w) {
  QMatrix m = QMatrix::identity(rep.dimension());
  for (int i : w) m = m * tau_matrix(rep, i);
  return m;
}

QMatrix cactus_matrix(const SeminormalRep& rep, const cactus::CactusWord& g) {
  if (g.r != rep.r()) throw Error(ErrorCode::BadParameter, "cactus word and representation sizes differ");
  QMatrix m = QMatrix::identity(rep.dimension());
  for (const auto& gen : g.gens) m = m * tau_word_matrix(rep, cactus::s_to_tau(gen));
  return m;
}

QMatrix sigma_vv(const SeminormalRep& rep) {
  return QMatrix::identity(rep.dimension()) + u_matrix(rep, 1).scaled(RationalFunction(2) / qi(2));
}

QMatrix inv_sqrt_t1_squared(const SeminormalRep& rep) {
  const RationalFunction coeff = (qpow(1) - qpow(-1)) / (qpow(1) + qpow(-1));
  return QMatrix::identity(rep.dimension()).scaled(qpow(-1)) - u_matrix(rep, 1).scaled(coeff);
}

QMatrix tau_block(int a) {
  QMatrix m(2, 2);
  m(0, 0) = qi(a).inverse();
  m(0, 1) = off_diagonal(-a);
  m(1, 0) = 1;
  m(1, 1) = -qi(a).inverse();
  return m;
}

QMatrix t_block(int a) {
  QMatrix m(2, 2);
  m(0, 0) = qpow(a) / qi(a);
  m(0, 1) = off_diagonal(-a);
  m(1, 0) = 1;
  m(1, 1) = -qpow(-a) / qi(a);
  return m;
}

std::vector<CheckResult> check_shape(const Partition& shape) {
  const SeminormalRep rep(shape);
  const int r = rep.r();
  const std::size_t n = rep.dimension();
  const QMatrix id = QMatrix::identity(n);
  std::vector<CheckResult> out;
  auto record = [&](const std::string& name, bool ok) { out.push_back({name, ok}); };

  std::vector<QMatrix> u, t, tau;
  for (int i = 1; i < r; ++i) {
    u.push_back(u_matrix(rep, i));
    t.push_back(t_matrix(rep, i));
    tau.push_back(tau_matrix(rep, i));
  }
  auto U = [&](int i) -> const QMatrix& { return u[static_cast<std::size_t>(i - 1)]; };
  auto T = [&](int i) -> const QMatrix& { return t[static_cast<std::size_t>(i - 1)]; };
  auto Tau = [&](int i) -> const QMatrix& { return tau[static_cast<std::size_t>(i - 1)]; };
  const RationalFunction two = qi(2);

  bool quad = true, braid_u = true, far_u = true, braid_t = true, far_t = true, eig = true;
  bool jm = true, jm_comm = true, factor = true, invol = true, block = true;
  for (int i = 1; i < r; ++i) {
    quad = quad && U(i) * U(i) == U(i).scaled(-two);
    eig = eig && (T(i) - id.scaled(qpow(1))) * (T(i) + id.scaled(qpow(-1))) == QMatrix(n, n);
    if (i + 1 < r) {
      braid_u = braid_u && U(i) * U(i + 1) * U(i) - U(i) == U(i + 1) * U(i) * U(i + 1) - U(i + 1);
      braid_t = braid_t && T(i) * T(i + 1) * T(i) == T(i + 1) * T(i) * T(i + 1);
    }
    for (int j = i + 2; j < r; ++j) {
      far_u = far_u && U(i) * U(j) == U(j) * U(i);
      far_t = far_t && T(i) * T(j) == T(j) * T(i);
    }
    jm = jm && jm_word_product(rep, i) == jm_matrix(rep, i, 2);
    for (int j = 1; j < r; ++j) jm_comm = jm_comm && jm_matrix(rep, i, 2) * jm_matrix(rep, j, 2) == jm_matrix(rep, j, 2) * jm_matrix(rep, i, 2);
    factor = factor && Tau(i) == jm_matrix(rep, i - 1, 1) * T(i) * jm_matrix(rep, i, -1);
    invol = invol && Tau(i) * Tau(i) == id;
    for (const QMatrix* m : {&U(i), &T(i), &Tau(i)}) {
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t partner = rep.index_of(swap_entries(rep.basis()[x].tableau, i));
        for (std::size_t y = 0; y < n; ++y)
          if (y != x && y != partner && !(*m)(y, x).is_zero()) block = false;
      }
    }
  }
  record("u_i^2 = -[2] u_i", quad);
  record("u_i u_{i+1} u_i - u_i = u_{i+1} u_i u_{i+1} - u_{i+1}", braid_u);
  record("u_i u_j = u_j u_i for |i-j| > 1", far_u);
  record("t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}", braid_t);
  record("t_i t_j = t_j t_i for |i-j| > 1", far_t);
  record("(t_i - q)(t_i + q^-1) = 0", eig);
  record("J_i word product = diag q^{2c}", jm);
  record("J_i J_j = J_j J_i", jm_comm);
  record("tau_i = J_{i-1}^{1/2} t_i J_i^{-1/2}", factor);
  record("tau_i^2 = 1", invol);
  record("block diagonal in s_i pairs", block);
  if (r >= 2) {
    const QMatrix s = sigma_vv(rep);
    const QMatrix half = inv_sqrt_t1_squared(rep);
    record("sigma_VV = tau_1", s == Tau(1));
    record("sigma_VV^2 = 1", s * s == id);
    record("t_1 (t_1^2)^{-1/2} = sigma_VV", T(1) * half == s);
    record("((t_1^2)^{-1/2})^2 t_1^2 = 1", half * half * T(1) * T(1) == id);
  }
  return out;
}

}  // namespace coboundary::hecke
