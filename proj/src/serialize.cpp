#include "rquint/serialize.hpp"

#include <stdexcept>

namespace rquint {

Json int_to_json(const Int& v) {
    if (mpz_fits_slong_p(v.get_mpz_t())) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer() && j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace rquint

namespace nlohmann {

using rquint::Int;

void adl_serializer<mpz_class>::to_json(json& j, const mpz_class& v) { j = rquint::int_to_json(v); }
mpz_class adl_serializer<mpz_class>::from_json(const json& j) { return rquint::int_from_json(j); }

void adl_serializer<mpq_class>::to_json(json& j, const mpq_class& v) { j = v.get_str(); }
mpq_class adl_serializer<mpq_class>::from_json(const json& j) {
    mpq_class v(j.get<std::string>());
    v.canonicalize();
    return v;
}

void adl_serializer<rquint::IntPoly>::to_json(json& j, const rquint::IntPoly& p) { j = p.coeffs(); }
rquint::IntPoly adl_serializer<rquint::IntPoly>::from_json(const json& j) {
    return rquint::IntPoly(j.get<std::vector<Int>>());
}

void adl_serializer<rquint::ModPoly>::to_json(json& j, const rquint::ModPoly& p) {
    j = json{{"q", p.modulus()}, {"coeffs", p.coeffs()}};
}
rquint::ModPoly adl_serializer<rquint::ModPoly>::from_json(const json& j) {
    return rquint::ModPoly(j.at("q").get<std::uint64_t>(), j.at("coeffs").get<std::vector<std::uint64_t>>());
}

void adl_serializer<rquint::QuinParams>::to_json(json& j, const rquint::QuinParams& p) {
    j = json{{"n", p.n}, {"A", p.A}, {"B", p.B}};
}
rquint::QuinParams adl_serializer<rquint::QuinParams>::from_json(const json& j) {
    return rquint::QuinParams(j.at("n").get<int>(), j.at("A").get<Int>(), j.at("B").get<Int>());
}

void adl_serializer<rquint::QuinInvariants>::to_json(json& j, const rquint::QuinInvariants& v) {
    j = json{{"W1", v.W1}, {"W2", v.W2}, {"W3", v.W3}, {"P", v.P}, {"Q", v.Q}, {"R", v.R}};
}
rquint::QuinInvariants adl_serializer<rquint::QuinInvariants>::from_json(const json& j) {
    return {j.at("W1").get<Int>(), j.at("W2").get<Int>(), j.at("W3").get<Int>(),
            j.at("P").get<Int>(),  j.at("Q").get<Int>(),  j.at("R").get<Int>()};
}

void adl_serializer<rquint::CertKind>::to_json(json& j, const rquint::CertKind& k) { j = rquint::to_string(k); }
rquint::CertKind adl_serializer<rquint::CertKind>::from_json(const json& j) {
    return rquint::cert_kind_from_string(j.get<std::string>());
}

void adl_serializer<rquint::ReducibilityCert>::to_json(json& j, const rquint::ReducibilityCert& c) {
    j = json{{"kind", c.kind}, {"target", c.target}, {"factors", c.factors}, {"st", nullptr}, {"s0s1", nullptr}};
    if (c.st) j["st"] = json::array({c.st->first, c.st->second});
    if (c.s0s1) j["s0s1"] = json::array({c.s0s1->first, c.s0s1->second});
}
rquint::ReducibilityCert adl_serializer<rquint::ReducibilityCert>::from_json(const json& j) {
    std::optional<std::pair<Int, Int>> st;
    std::optional<std::pair<rquint::IntPoly, rquint::IntPoly>> s0s1;
    if (!j.at("st").is_null()) st.emplace(j["st"].at(0).get<Int>(), j["st"].at(1).get<Int>());
    if (!j.at("s0s1").is_null()) {
        s0s1.emplace(j["s0s1"].at(0).get<rquint::IntPoly>(), j["s0s1"].at(1).get<rquint::IntPoly>());
    }
    return rquint::ReducibilityCert(j.at("kind").get<rquint::CertKind>(), j.at("target").get<rquint::IntPoly>(),
                                    j.at("factors").get<std::vector<rquint::IntPoly>>(), std::move(st),
                                    std::move(s0s1));
}

void adl_serializer<rquint::DedekindOutcome>::to_json(json& j, const rquint::DedekindOutcome& o) {
    j = json{{"q", o.q},   {"divides_index", o.divides_index}, {"gcd_witness", o.gcd_witness},
             {"h1", o.h1}, {"h2", o.h2},                       {"F", o.F}};
}
rquint::DedekindOutcome adl_serializer<rquint::DedekindOutcome>::from_json(const json& j) {
    return {j.at("q").get<std::uint64_t>(),        j.at("divides_index").get<bool>(),
            j.at("gcd_witness").get<rquint::ModPoly>(), j.at("h1").get<rquint::IntPoly>(),
            j.at("h2").get<rquint::IntPoly>(),     j.at("F").get<rquint::IntPoly>()};
}

void adl_serializer<rquint::MonoStatus>::to_json(json& j, const rquint::MonoStatus& s) { j = rquint::to_string(s); }
rquint::MonoStatus adl_serializer<rquint::MonoStatus>::from_json(const json& j) {
    return rquint::mono_status_from_string(j.get<std::string>());
}

void adl_serializer<rquint::MonogenicityVerdict>::to_json(json& j, const rquint::MonogenicityVerdict& v) {
    j = json{{"status", v.status},
             {"obstruction_primes", v.obstruction_primes},
             {"checked_primes", v.checked_primes},
             {"outcomes", v.outcomes},
             {"certificate", v.certificate},
             {"reason", v.reason},
             {"budget_exhausted", v.budget_exhausted}};
}
rquint::MonogenicityVerdict adl_serializer<rquint::MonogenicityVerdict>::from_json(const json& j) {
    rquint::MonogenicityVerdict v;
    v.status = j.at("status").get<rquint::MonoStatus>();
    v.obstruction_primes = j.at("obstruction_primes").get<std::vector<std::uint64_t>>();
    v.checked_primes = j.at("checked_primes").get<std::vector<std::uint64_t>>();
    v.outcomes = j.at("outcomes").get<std::vector<rquint::DedekindOutcome>>();
    v.certificate = j.at("certificate").get<std::optional<rquint::ReducibilityCert>>();
    v.reason = j.at("reason").get<std::string>();
    v.budget_exhausted = j.at("budget_exhausted").get<bool>();
    return v;
}

void adl_serializer<rquint::GaloisLabel>::to_json(json& j, const rquint::GaloisLabel& l) { j = rquint::to_string(l); }
rquint::GaloisLabel adl_serializer<rquint::GaloisLabel>::from_json(const json& j) {
    return rquint::galois_label_from_string(j.get<std::string>());
}

void adl_serializer<rquint::FrobeniusEvidence>::to_json(json& j, const rquint::FrobeniusEvidence& e) {
    j = json{{"prime", e.prime}, {"pattern", e.pattern}};
}
rquint::FrobeniusEvidence adl_serializer<rquint::FrobeniusEvidence>::from_json(const json& j) {
    return {j.at("prime").get<std::uint64_t>(), j.at("pattern").get<std::vector<std::pair<int, unsigned>>>()};
}

void adl_serializer<rquint::SquareTest>::to_json(json& j, const rquint::SquareTest& s) {
    j = json{{"quantity", s.quantity}, {"value", s.value}, {"is_square", s.is_square}};
}
rquint::SquareTest adl_serializer<rquint::SquareTest>::from_json(const json& j) {
    return {j.at("quantity").get<std::string>(), j.at("value").get<Int>(), j.at("is_square").get<bool>()};
}

void adl_serializer<rquint::GaloisClass>::to_json(json& j, const rquint::GaloisClass& g) {
    j = json{{"label", g.label},
             {"frobenius", g.frobenius},
             {"squares", g.squares},
             {"primes_scanned", g.primes_scanned},
             {"certified", g.certified}};
}
rquint::GaloisClass adl_serializer<rquint::GaloisClass>::from_json(const json& j) {
    rquint::GaloisClass g;
    g.label = j.at("label").get<rquint::GaloisLabel>();
    g.frobenius = j.at("frobenius").get<std::vector<rquint::FrobeniusEvidence>>();
    g.squares = j.at("squares").get<std::vector<rquint::SquareTest>>();
    g.primes_scanned = j.at("primes_scanned").get<std::size_t>();
    g.certified = j.at("certified").get<bool>();
    return g;
}

void adl_serializer<rquint::SearchRecord>::to_json(json& j, const rquint::SearchRecord& r) {
    j = json{{"params", r.params},
             {"invariants", r.invariants},
             {"verdict", r.verdict},
             {"galois", r.galois},
             {"field_disc", r.field_disc}};
}
rquint::SearchRecord adl_serializer<rquint::SearchRecord>::from_json(const json& j) {
    return {j.at("params").get<rquint::QuinParams>(), j.at("invariants").get<rquint::QuinInvariants>(),
            j.at("verdict").get<rquint::MonogenicityVerdict>(), j.at("galois").get<rquint::GaloisClass>(),
            j.at("field_disc").get<std::optional<Int>>()};
}

void adl_serializer<rquint::FamilyRecord>::to_json(json& j, const rquint::FamilyRecord& f) {
    j = json{{"k", f.k},   {"t", f.t},   {"W1", f.W1},
             {"W2", f.W2}, {"W3", f.W3}, {"g_squarefree", f.g_squarefree},
             {"record", f.record}};
}
rquint::FamilyRecord adl_serializer<rquint::FamilyRecord>::from_json(const json& j) {
    return {j.at("k").get<Int>(),
            j.at("t").get<Int>(),
            j.at("W1").get<Int>(),
            j.at("W2").get<Int>(),
            j.at("W3").get<Int>(),
            j.at("g_squarefree").get<std::optional<bool>>(),
            j.at("record").get<rquint::SearchRecord>()};
}

void adl_serializer<rquint::FieldClass>::to_json(json& j, const rquint::FieldClass& c) {
    j = json{{"disc", c.disc}, {"members", c.members}, {"equations_hold", c.equations_hold}};
}
rquint::FieldClass adl_serializer<rquint::FieldClass>::from_json(const json& j) {
    return {j.at("disc").get<Int>(), j.at("members").get<std::vector<std::size_t>>(),
            j.at("equations_hold").get<std::optional<bool>>()};
}

void adl_serializer<rquint::FieldPartition>::to_json(json& j, const rquint::FieldPartition& p) {
    j = json{{"classes", p.classes}, {"all_distinct", p.all_distinct}};
}
rquint::FieldPartition adl_serializer<rquint::FieldPartition>::from_json(const json& j) {
    return {j.at("classes").get<std::vector<rquint::FieldClass>>(), j.at("all_distinct").get<bool>()};
}

void adl_serializer<rquint::ObstructionCandidate>::to_json(json& j, const rquint::ObstructionCandidate& c) {
    j = json{{"ell", c.ell},
             {"linear_factors", c.linear_factors},
             {"within_bound", c.within_bound},
             {"obstructed", c.obstructed}};
}
rquint::ObstructionCandidate adl_serializer<rquint::ObstructionCandidate>::from_json(const json& j) {
    return {j.at("ell").get<std::uint64_t>(), j.at("linear_factors").get<unsigned>(),
            j.at("within_bound").get<bool>(), j.at("obstructed").get<bool>()};
}

void adl_serializer<rquint::NgCount>::to_json(json& j, const rquint::NgCount& n) {
    j = json{{"X", n.X}, {"count", n.count}, {"unknown", n.unknown}, {"certified", n.certified}};
}
rquint::NgCount adl_serializer<rquint::NgCount>::from_json(const json& j) {
    return {j.at("X").get<std::uint64_t>(), j.at("count").get<std::uint64_t>(), j.at("unknown").get<std::uint64_t>(),
            j.at("certified").get<bool>()};
}

void adl_serializer<rquint::RhoEntry>::to_json(json& j, const rquint::RhoEntry& e) {
    j = json{{"ell", e.ell}, {"rho", e.rho}, {"phi", e.phi}};
}
rquint::RhoEntry adl_serializer<rquint::RhoEntry>::from_json(const json& j) {
    return {j.at("ell").get<std::uint64_t>(), j.at("rho").get<std::uint64_t>(), j.at("phi").get<std::uint64_t>()};
}

void adl_serializer<rquint::DensityReport>::to_json(json& j, const rquint::DensityReport& r) {
    j = json{{"candidates", r.candidates},
             {"obstruction_primes", r.obstruction_primes},
             {"rho_table", r.rho_table},
             {"cg", r.cg},
             {"cg_decimal", r.cg_decimal},
             {"truncation_bound", r.truncation_bound},
             {"ng", r.ng},
             {"certified", r.certified}};
}
rquint::DensityReport adl_serializer<rquint::DensityReport>::from_json(const json& j) {
    rquint::DensityReport r;
    r.candidates = j.at("candidates").get<std::vector<rquint::ObstructionCandidate>>();
    r.obstruction_primes = j.at("obstruction_primes").get<std::vector<std::uint64_t>>();
    r.rho_table = j.at("rho_table").get<std::vector<rquint::RhoEntry>>();
    r.cg = j.at("cg").get<mpq_class>();
    r.cg_decimal = j.at("cg_decimal").get<std::string>();
    r.truncation_bound = j.at("truncation_bound").get<std::uint64_t>();
    r.ng = j.at("ng").get<rquint::NgCount>();
    r.certified = j.at("certified").get<bool>();
    return r;
}

}  // namespace nlohmann
