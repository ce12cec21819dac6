#include <doctest.h>

#include "rquint/serialize.hpp"

using namespace rquint;

namespace {

template <typename T>
void round_trip(const T& v) {
    const Json j = v;
    const T back = j.get<T>();
    CHECK(back == v);
    CHECK(Json(back).dump() == j.dump());
    CHECK(Json::parse(j.dump()).get<T>() == v);
}

}  // namespace

TEST_CASE("integers") {
    CHECK(int_to_json(Int(-42)).is_number_integer());
    const Int big("-123456789012345678901234567890");
    CHECK(int_to_json(big).is_string());
    CHECK(int_to_json(big).get<std::string>() == "-123456789012345678901234567890");
    CHECK(int_from_json(Json("77")) == 77);
    CHECK(int_from_json(Json(-5)) == -5);
    CHECK_THROWS(int_from_json(Json("12x")));
    CHECK_THROWS(int_from_json(Json(1.5)));
    round_trip(big);
    round_trip(Int(0));
    round_trip(Int("9223372036854775807"));
    round_trip(Int("9223372036854775808"));
    round_trip(mpq_class(-7, 12));
}

TEST_CASE("polynomials and parameters") {
    round_trip(IntPoly{1, -11, 21, -11, 1});
    round_trip(IntPoly());
    round_trip(ModPoly(7, {3, 0, 1}));
    CHECK(Json(IntPoly{1, 2}).dump() == "[1,2]");
    round_trip(QuinParams(3, 9, 9));
    round_trip(invariants(-11, 21));
    round_trip(CertKind::CapelliCase2);
    round_trip(MonoStatus::Undecided);
    round_trip(GaloisLabel::WreathC2sqC2);
}

TEST_CASE("certificates") {
    round_trip(*octic_family_membership(1, 5));
    round_trip(*capelli_reducible(1, 1, 1));
    round_trip(*capelli_reducible(8, -2, 2));
    round_trip(*quartic_irreducible(1, 2).certificate);
}

TEST_CASE("records") {
    for (const auto& p : {QuinParams(2, 1, 1), QuinParams(3, 9, 9), QuinParams(3, 1, 1), QuinParams(2, 2, 7)}) {
        const auto r = classify_record(p);
        round_trip(r);
        round_trip(r.verdict);
        round_trip(r.galois);
        for (const auto& o : r.verdict.outcomes) round_trip(o);
    }
    round_trip(frobenius_fingerprint(5, 5, 100));
    for (const auto& f : prime_family(1, {2, 40})) round_trip(f);
    const auto part = distinct_fields({classify_record(QuinParams(2, 1, 1)), classify_record(QuinParams(2, -1, 1))});
    round_trip(part);
    round_trip(part.classes[0]);
}

TEST_CASE("density report") {
    const auto r = density_report(parse_factored("-1,4|5,12|5,-8,16"), 50, 500);
    round_trip(r);
    round_trip(r.ng);
    round_trip(r.rho_table.front());
    round_trip(r.candidates.front());
}

TEST_CASE("output is reproducible") {
    const auto a = Json(grid_classify(3, {-7, 9}, {-7, 9}, ResidueFilter::Mod4_11, 3)).dump();
    const auto b = Json(grid_classify(3, {-7, 9}, {-7, 9}, ResidueFilter::Mod4_11, 3, kDefaultBudget, 4)).dump();
    CHECK(a == b);
}
