#include <doctest.h>

#include "artifact/codecft.hpp"
#include "artifact/framed.hpp"

using namespace artifact;

namespace {

bool all_pass(const std::vector<VerifierReport>& reps) {
  for (const auto& r : reps)
    if (!r.pass()) return false;
  return true;
}

}  // namespace

TEST_SUITE("framed") {
  TEST_CASE("ising algebra") {
    FramedAlgebra S = ising_algebra();
    auto reps = verify_axioms(S);
    REQUIRE(reps.size() == 4);
    for (const auto& r : reps) CHECK_MESSAGE(r.pass(), r.axiom);
    CHECK(reps[3].checked > 0);
    CHECK(check_commutativity(S).pass());
    CHECK(check_bilinear(S).pass());
    CHECK(is_simple(S));
    StructureCodes sc = structure_codes(S);
    CHECK(sc.D.str() == "<1|1>");
    CHECK(sc.C.str() == "<1|1>");
    CHECK(sc.even_ok);
  }

  TEST_CASE("mutations are caught") {
    FramedAlgebra S = ising_algebra();
    const int one = S.index_of("1"), a = S.index_of("a"), d = S.index_of("d");
    FramedAlgebra M1 = S;
    M1.set_product(d, d, {{one, Cyclo(1)}, {a, Cyclo(-1)}});
    CHECK_FALSE(all_pass(verify_axioms(M1)));
    FramedAlgebra M2 = S;
    M2.set_product(a, d, {{d, Cyclo(-1)}});
    M2.set_product(d, a, {{d, Cyclo(-1)}});
    CHECK_FALSE(all_pass(verify_axioms(M2)));
    FramedAlgebra M3 = S;
    M3.set_product(a, a, {{a, Cyclo(1)}});  // leaves the fusion rules
    auto reps = verify_axioms(M3);
    CHECK_FALSE(reps[2].pass());
    FramedAlgebra M4 = S;
    M4.set_product(one, d, {{d, Cyclo(2)}});
    CHECK_FALSE(verify_axioms(M4)[1].pass());
  }

  TEST_CASE("violation list is capped") {
    FramedAlgebra S = ising_algebra();
    const int one = S.index_of("1"), a = S.index_of("a"), d = S.index_of("d");
    S.set_product(d, d, {{one, Cyclo(1)}, {a, Cyclo(-1)}});
    VerifyOptions opt;
    opt.max_violations = 1;
    VerifierReport r = verify_fa4(S, opt);
    CHECK(r.violation_count >= 1);
    CHECK(r.violations.size() <= 1);
    opt.workers = 3;
    VerifierReport r3 = verify_fa4(S, opt);
    CHECK(r3.violation_count == r.violation_count);
  }

  TEST_CASE("twisted group algebra") {
    Code C = Code::from_words({parse_word("1|1")}, 1, 1);
    FramedAlgebra S = twisted_group_algebra(C);
    CHECK(S.size() == 2);
    CHECK(all_pass(verify_axioms(S)));
    Code C2 = Code::from_words({parse_word("11|00"), parse_word("10|10")}, 2, 2);
    FramedAlgebra T = twisted_group_algebra(C2);
    CHECK(T.size() == 4);
    CHECK(all_pass(verify_axioms(T)));
    CHECK(check_commutativity(T).pass());
  }

  TEST_CASE("exact rank") {
    std::vector<std::vector<Cyclo>> m = {{1, 2}, {2, 4}};
    CHECK(exact_rank(m) == 1);
    m = {{Cyclo::sqrt2(), 1}, {1, Cyclo::inv_sqrt2()}};
    CHECK(exact_rank(m) == 1);
    m = {{Cyclo::i(), 1}, {1, Cyclo::i()}};
    CHECK(exact_rank(m) == 2);
  }
}
