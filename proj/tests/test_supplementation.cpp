#include <doctest.h>

#include <numeric>

#include "grouplab/catalog.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/supplementation.hpp"
#include "grouplab/sylow_hall.hpp"
#include "oracles.hpp"

using namespace grouplab;

namespace {

Subgroup sub(PermGroup const &g, char const *gens) {
  return Subgroup(g, parse_generator_list(gens, g.degree()));
}

constexpr auto nc = SupplementKind::nc;
constexpr auto c = SupplementKind::c;

} // namespace

TEST_CASE("verify_witness on the A4 example") {
  auto a4 = fixture("A4");
  auto g = a4.group;
  auto C = a4.subgroup("C");
  auto D = a4.subgroup("D");

  auto w = verify_witness(C, D, nc);
  CHECK(w.valid());
  CHECK(w.hk_order == 4);
  CHECK(w.hk_normal);
  CHECK(w.core_h.is_trivial());
  CHECK(w.intersection_in_core);
  CHECK(verify_witness(C, D, c).valid() == false);

  auto whole = verify_witness(C, Subgroup::whole(g), c);
  CHECK(whole.hk_order == 12);
  CHECK_FALSE(whole.intersection_in_core);
  CHECK_FALSE(whole.valid());

  auto B = a4.subgroup("B");
  auto t = verify_witness(B, Subgroup::trivial(g), nc);
  CHECK(t.valid());
  CHECK(t.core_h == B);

  CHECK_THROWS_AS(verify_witness(C, Subgroup::trivial(symmetric(5)), nc), PreconditionError);
}

TEST_CASE("find supplements in A4") {
  auto a4 = fixture("A4");
  auto C = a4.subgroup("C");
  auto cr = find_c_supplement(C);
  CHECK(cr.answer == Tri::no);
  CHECK(cr.proof == "exhaustive(10)");
  CHECK_FALSE(cr.witness.has_value());

  auto nr = find_nc_supplement(C);
  REQUIRE(nr.answer == Tri::yes);
  CHECK(nr.witness->valid());
  CHECK(nr.witness->kind == nc);
  CHECK(nr.proof == "exhaustive(10)");

  auto all = find_c_supplement(Subgroup::whole(a4.group));
  REQUIRE(all.answer == Tri::yes);
  CHECK(all.witness->k.is_trivial());

  auto lattice = enumerate_subgroups(a4.group);
  auto st = supplement_status(lattice, a4.subgroup("B"));
  CHECK(st.c.answer == Tri::yes);
  CHECK(st.nc.answer == Tri::yes);
  CHECK(st.c.witness->hk_order == 12);
}

TEST_CASE("lattice scan matches the brute-force oracle") {
  for (auto spec : {"A4", "S4", "D8", "Q8", "S3", "C3:C4", "prod(S3,C2)", "D10"}) {
    INFO(spec);
    auto g = construct(spec).group;
    auto elements = oracle::closure(g.generators(), g.degree());
    auto subs = oracle::two_generated_subgroups(elements);
    auto lattice = enumerate_subgroups(g);
    REQUIRE(lattice.size() == subs.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      auto h = lattice.subgroup(i);
      auto expect = oracle::supplemented(elements, subs, oracle::closure(h.generators(), g.degree()));
      auto st = supplement_status(lattice, h);
      CHECK((st.c.answer == Tri::yes) == expect.c);
      CHECK((st.nc.answer == Tri::yes) == expect.nc);
    }
  }
}

TEST_CASE("Remark 1: nc and c agree in simple groups") {
  for (auto spec : {"A5", "L2(7)", "L2(11)"}) {
    INFO(spec);
    auto g = construct(spec).group;
    auto lattice = enumerate_subgroups(g);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      if (std::string(spec) == "L2(11)" && lattice[i].order > 24)
        continue;
      bool has_c = first_supplement(lattice, i, c).has_value();
      bool has_nc = first_supplement(lattice, i, nc).has_value();
      CHECK(has_c == has_nc);
    }
  }
}

TEST_CASE("Remark 1: nc and c agree for maximal subgroups") {
  for (auto const &e : default_catalog()) {
    if (e.group.order() > 500 || e.scale != Scale::exhaustive)
      continue;
    INFO(e.name);
    auto lattice = enumerate_subgroups(e.group);
    for (std::size_t i : lattice.lower_covers(lattice.whole_index()))
      CHECK(first_supplement(lattice, i, c).has_value() ==
            first_supplement(lattice, i, nc).has_value());
  }
}

TEST_CASE("a c witness is an nc witness") {
  for (auto spec : {"S4", "A4", "D12", "prod(S3,S3)"}) {
    auto g = construct(spec).group;
    auto lattice = enumerate_subgroups(g);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      auto r = find_supplement(lattice, lattice.subgroup(i), c);
      if (r.answer != Tri::yes)
        continue;
      CHECK(verify_witness(r.witness->h, r.witness->k, nc).valid());
    }
  }
}

TEST_CASE("normalize_supplement") {
  auto a4 = fixture("A4");
  auto C = a4.subgroup("C");
  auto D = a4.subgroup("D");
  auto n = normalize_supplement(verify_witness(C, D, nc));
  CHECK(n.k == D);
  CHECK(n.intersection_is_core());

  auto B = a4.subgroup("B");
  auto nb = normalize_supplement(verify_witness(B, Subgroup::trivial(a4.group), nc));
  CHECK(nb.k == B);
  CHECK(nb.intersection_is_core());

  auto s4 = symmetric(4);
  auto p = sylow(s4, 2);
  auto r = find_nc_supplement(p);
  REQUIRE(r.answer == Tri::yes);
  auto np = normalize_supplement(*r.witness);
  CHECK(np.valid());
  CHECK(np.intersection_is_core());
  CHECK(np.core_h.order() == 4);

  CHECK_THROWS_AS(normalize_supplement(verify_witness(C, Subgroup::whole(a4.group), nc)),
                  PreconditionError);
}

TEST_CASE("restrict_to_intermediate") {
  auto a4 = fixture("A4");
  auto C = a4.subgroup("C");
  auto D = a4.subgroup("D");
  auto B = a4.subgroup("B");
  auto w = verify_witness(C, D, nc);

  auto r = restrict_to_intermediate(w, B);
  CHECK(r.valid());
  CHECK(r.k.order() == 2);
  CHECK(r.core_h.order() == 2);

  auto same = restrict_to_intermediate(w, Subgroup::whole(a4.group));
  CHECK(same.valid());
  CHECK(same.k == D);

  auto tight = restrict_to_intermediate(w, C);
  CHECK(tight.valid());
  CHECK(tight.hk_order == 2);

  auto three = sub(a4.group, "(1,2,3)");
  CHECK_THROWS_AS(restrict_to_intermediate(w, three), PreconditionError);
}

TEST_CASE("push to quotients") {
  auto s3 = symmetric(3);
  auto a3 = sub(s3, "(1,2,3)");
  auto t = sub(s3, "(1,2)");

  auto w1 = verify_witness(a3, t, nc);
  REQUIRE(w1.valid());
  auto q1 = push_to_quotient_contained(w1, a3);
  CHECK(q1.valid());
  CHECK(q1.h.is_trivial());
  CHECK(q1.group().order() == 2);

  auto w2 = verify_witness(t, a3, nc);
  REQUIRE(w2.valid());
  auto q2 = push_to_quotient_coprime(w2, a3);
  CHECK(q2.valid());
  CHECK(q2.h.is_whole());

  auto a4 = fixture("A4");
  auto B = a4.subgroup("B");
  auto lattice = enumerate_subgroups(a4.group);
  for (std::size_t i : lattice.of_order(3)) {
    auto r = find_supplement(lattice, lattice.subgroup(i), nc);
    REQUIRE(r.answer == Tri::yes);
    auto q = push_to_quotient_coprime(*r.witness, B);
    CHECK(q.valid());
    CHECK(q.group().order() == 3);
    CHECK(q.h.is_whole());
  }

  CHECK_THROWS_AS(push_to_quotient_contained(w2, a3), PreconditionError);
  CHECK_THROWS_AS(push_to_quotient_coprime(w1, a3), PreconditionError);
  CHECK_THROWS_AS(push_to_quotient_coprime(w2, t), PreconditionError);
}

TEST_CASE("Lemma 1 and Lemma 2 hold on every scanned witness") {
  std::size_t witnesses = 0, transforms = 0;
  for (auto const &e : default_catalog()) {
    if (e.group.order() > 200 || e.scale != Scale::exhaustive)
      continue;
    INFO(e.name);
    auto lattice = enumerate_subgroups(e.group);
    std::vector<std::size_t> normals;
    for (std::size_t n = 0; n < lattice.size(); ++n)
      if (lattice[n].normal)
        normals.push_back(n);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      auto h = lattice.subgroup(i);
      auto r = find_supplement(lattice, h, nc);
      if (r.answer != Tri::yes)
        continue;
      ++witnesses;
      auto const &w = *r.witness;
      CHECK(normalize_supplement(w).intersection_is_core());
      for (std::size_t m : lattice.supergroups(i)) {
        CHECK(restrict_to_intermediate(w, lattice.subgroup(m)).valid());
        ++transforms;
      }
      for (std::size_t n : normals) {
        auto nsub = lattice.subgroup(n);
        if (lattice[n].elements.is_subset_of(lattice[i].elements)) {
          CHECK(push_to_quotient_contained(w, nsub).valid());
          ++transforms;
        }
        if (std::gcd(lattice[n].order, lattice[i].order) == 1) {
          CHECK(push_to_quotient_coprime(w, nsub).valid());
          ++transforms;
        }
      }
    }
  }
  MESSAGE(witnesses << " witnesses, " << transforms << " transforms");
  CHECK(witnesses > 0);
}

TEST_CASE("heuristic mode never answers no") {
  Bounds small;
  small.lattice_order = 10;
  auto a4 = fixture("A4");
  auto C = a4.subgroup("C");
  auto cr = find_c_supplement(C, small);
  CHECK(cr.answer == Tri::unknown);
  CHECK(cr.proof.starts_with("heuristic("));
  auto nr = find_nc_supplement(C, small, {a4.subgroup("D")});
  CHECK(nr.answer == Tri::yes);
  CHECK(nr.witness->valid());
  // A normal subgroup is supplemented by the trivial candidate.
  CHECK(find_nc_supplement(a4.subgroup("B"), small).answer == Tri::yes);
}

TEST_CASE("witness JSON") {
  auto a4 = fixture("A4");
  auto w = verify_witness(a4.subgroup("C"), a4.subgroup("D"), nc);
  auto j = witness_json(w, "A4");
  CHECK(j["group"] == "A4");
  CHECK(j["kind"] == "nc");
  CHECK(j["H-gens"] == "(1,2)(3,4)");
  CHECK(j["checks"]["hk_order"] == 4);
  CHECK(j["checks"]["hk_normal"] == true);
  CHECK(j["checks"]["core_order"] == 1);
  CHECK(j["checks"]["intersection_in_core"] == true);
  CHECK(order_json(Order(1) << 60) == "1152921504606846976");
}
