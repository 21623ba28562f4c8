#include <gtest/gtest.h>

#include "coboundary/hecke.hpp"

using namespace coboundary;
using namespace coboundary::hecke;
using algebra::LaurentPoly;
using algebra::q_int;

namespace {

RationalFunction qi(int n) { return RationalFunction(q_int(n)); }
RationalFunction qp(int k) { return RationalFunction(LaurentPoly::monomial(k)); }

std::vector<Partition> shapes_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& p : weights::partitions_of(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Seminormal, BasisAndContents) {
  const SeminormalRep rep({2, 1});
  ASSERT_EQ(rep.dimension(), 2u);
  EXPECT_EQ(rep.basis()[0].tableau.to_string(), "12/3");
  EXPECT_EQ(rep.basis()[0].axial(1), 1);
  EXPECT_EQ(rep.basis()[0].axial(2), -2);
  EXPECT_EQ(rep.index_of(oracles::Tableau::parse("13/2")), 1u);
  EXPECT_EQ(rep.index_of(oracles::Tableau::parse("1/2/3")), 2u);
}

TEST(Seminormal, SingleRowAndColumn) {
  // Axial distance +1 along a row gives u = 0 and t = q; -1 down a column
  // gives u = -[2] and t = -q^-1.
  const SeminormalRep row({3});
  const SeminormalRep col({1, 1, 1});
  for (int i = 1; i <= 2; ++i) {
    EXPECT_EQ(u_matrix(row, i), QMatrix(1, 1));
    EXPECT_EQ(t_matrix(row, i), QMatrix::diagonal({qp(1)}));
    EXPECT_EQ(u_matrix(col, i), QMatrix::diagonal({-qi(2)}));
    EXPECT_EQ(t_matrix(col, i), QMatrix::diagonal({-qp(-1)}));
    EXPECT_EQ(tau_matrix(row, i), QMatrix::identity(1));
    EXPECT_EQ(tau_matrix(col, i), QMatrix::diagonal({RationalFunction(-1)}));
  }
}

TEST(Seminormal, TwoByTwoBlock) {
  const SeminormalRep rep({2, 1});
  const auto u = u_matrix(rep, 2);
  // 12/3 has axial distance -2 at i = 2; 13/2 has +2.
  EXPECT_EQ(u(0, 0), -qi(-3) / qi(-2));
  EXPECT_EQ(u(1, 1), -qi(1) / qi(2));
  EXPECT_EQ(u(0, 1), RationalFunction(1));
  EXPECT_EQ(u(1, 0), qi(-3) * qi(-1) / (qi(-2) * qi(-2)));
  EXPECT_EQ(u * u, u.scaled(-qi(2)));
}

TEST(Seminormal, JucysMurphy) {
  const SeminormalRep rep({2});
  EXPECT_EQ(jm_matrix(rep, 1, 2), QMatrix::diagonal({qp(2)}));
  for (const auto& shape : shapes_up_to(5)) {
    const SeminormalRep r(shape);
    for (int i = 0; i < r.r(); ++i) {
      EXPECT_EQ(jm_matrix(r, i, 1) * jm_matrix(r, i, 1), jm_matrix(r, i, 2));
      EXPECT_EQ(jm_matrix(r, i, 1) * jm_matrix(r, i, -1), QMatrix::identity(r.dimension()));
      EXPECT_EQ(jm_word_product(r, i), jm_matrix(r, i, 2));
    }
  }
  EXPECT_THROW(jm_matrix(rep, 1, 3), Error);
}

TEST(Seminormal, AllIdentitiesUpToSixBoxes) {
  for (const auto& shape : shapes_up_to(6))
    for (const auto& c : check_shape(shape)) EXPECT_TRUE(c.ok) << shape.to_string() << ": " << c.name;
}

TEST(Seminormal, InverseOfT) {
  for (const auto& shape : shapes_up_to(5)) {
    const SeminormalRep rep(shape);
    for (int i = 1; i < rep.r(); ++i)
      EXPECT_EQ(t_matrix(rep, i) * t_inverse_matrix(rep, i), QMatrix::identity(rep.dimension()));
  }
}

TEST(Blocks, ConjugationIdentity) {
  for (int a = 1; a <= 6; ++a) {
    EXPECT_EQ(tau_block(a) * tau_block(a), QMatrix::identity(2));
    for (int r = 0; r <= a; ++r) {
      const int s = a - r;
      EXPECT_EQ(QMatrix::diagonal({qp(r), qp(-s)}) * tau_block(a), t_block(a) * QMatrix::diagonal({qp(-s), qp(r)}));
    }
  }
}

TEST(Blocks, MatchRepresentation) {
  // In shape (2,1) at i = 2, 13/2 has axial distance +2 and 12/3 is its partner.
  const SeminormalRep rep({2, 1});
  const auto tau = tau_matrix(rep, 2);
  const auto block = tau_block(2);
  EXPECT_EQ(tau(1, 1), block(0, 0));
  EXPECT_EQ(tau(0, 1), block(1, 0));
  EXPECT_EQ(tau(1, 0), block(0, 1));
  EXPECT_EQ(tau(0, 0), block(1, 1));
}

TEST(Cactus, SOneTwoIsTauOne) {
  for (const auto& shape : shapes_up_to(4)) {
    const SeminormalRep rep(shape);
    if (rep.r() < 2) continue;
    EXPECT_EQ(cactus_matrix(rep, cactus::CactusWord::parse(rep.r(), "s(1,2)")), tau_matrix(rep, 1));
  }
}

TEST(Cactus, DefiningRelationsAsMatrices) {
  for (const auto& shape : shapes_up_to(4)) {
    const SeminormalRep rep(shape);
    const int r = rep.r();
    auto same = [&](const cactus::CactusWord& l, const cactus::CactusWord& rr) {
      return cactus_matrix(rep, l) == cactus_matrix(rep, rr);
    };
    for (const auto& a : cactus::all_generators(r)) {
      EXPECT_TRUE(cactus::relation_check(cactus::Relation::Involution, r, a, {}, same));
      for (const auto& b : cactus::all_generators(r)) {
        if (a.q < b.p) EXPECT_TRUE(cactus::relation_check(cactus::Relation::Disjoint, r, a, b, same));
        if (a.p <= b.p && b.q <= a.q) EXPECT_TRUE(cactus::relation_check(cactus::Relation::Nested, r, a, b, same));
      }
    }
  }
}

TEST(Cactus, ThirdPresentationRelation) {
  for (const auto& shape : weights::partitions_of(5)) {
    const SeminormalRep rep(shape);
    const QMatrix id = QMatrix::identity(rep.dimension());
    for (int k = 1; k <= 5; ++k)
      for (int j = 1; j < k; ++j)
        for (int i = 1; i + 1 < j; ++i) {
          cactus::TauWord x = {i};
          for (const auto& part : {cactus::q_word(k - 1), cactus::q_word(k - j), cactus::q_word(k - 1)})
            x.insert(x.end(), part.begin(), part.end());
          const QMatrix m = tau_word_matrix(rep, x);
          EXPECT_EQ(m * m, id) << shape.to_string() << " i=" << i << " j=" << j << " k=" << k;
        }
  }
}

TEST(SigmaVV, Formula) {
  for (const auto& shape : shapes_up_to(4)) {
    const SeminormalRep rep(shape);
    if (rep.r() < 2) continue;
    const auto s = sigma_vv(rep);
    EXPECT_EQ(s * s, QMatrix::identity(rep.dimension()));
    EXPECT_EQ(s, tau_matrix(rep, 1));
  }
}

TEST(Errors, IndexRange) {
  const SeminormalRep rep({2, 1});
  EXPECT_THROW(u_matrix(rep, 0), Error);
  EXPECT_THROW(u_matrix(rep, 3), Error);
  EXPECT_THROW(cactus_matrix(rep, cactus::CactusWord::parse(4, "s(1,2)")), Error);
}
