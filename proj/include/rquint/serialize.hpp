#pragma once

// JSON encodings for every record type. Integers that fit in 64 bits are
// JSON numbers and larger ones are decimal strings; polynomials are
// ascending coefficient arrays. Every encoding round-trips exactly.

#include <json.hpp>

#include "rquint/dedekind.hpp"
#include "rquint/density.hpp"
#include "rquint/galois.hpp"
#include "rquint/search.hpp"

namespace rquint {

using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

}  // namespace rquint

namespace nlohmann {

#define RQUINT_JSON_SERIALIZER(T)            \
    template <>                              \
    struct adl_serializer<T> {               \
        static void to_json(json& j, const T& v); \
        static T from_json(const json& j);   \
    };

RQUINT_JSON_SERIALIZER(mpz_class)
RQUINT_JSON_SERIALIZER(mpq_class)
RQUINT_JSON_SERIALIZER(rquint::IntPoly)
RQUINT_JSON_SERIALIZER(rquint::ModPoly)
RQUINT_JSON_SERIALIZER(rquint::QuinParams)
RQUINT_JSON_SERIALIZER(rquint::QuinInvariants)
RQUINT_JSON_SERIALIZER(rquint::CertKind)
RQUINT_JSON_SERIALIZER(rquint::ReducibilityCert)
RQUINT_JSON_SERIALIZER(rquint::DedekindOutcome)
RQUINT_JSON_SERIALIZER(rquint::MonoStatus)
RQUINT_JSON_SERIALIZER(rquint::MonogenicityVerdict)
RQUINT_JSON_SERIALIZER(rquint::GaloisLabel)
RQUINT_JSON_SERIALIZER(rquint::FrobeniusEvidence)
RQUINT_JSON_SERIALIZER(rquint::SquareTest)
RQUINT_JSON_SERIALIZER(rquint::GaloisClass)
RQUINT_JSON_SERIALIZER(rquint::SearchRecord)
RQUINT_JSON_SERIALIZER(rquint::FamilyRecord)
RQUINT_JSON_SERIALIZER(rquint::FieldClass)
RQUINT_JSON_SERIALIZER(rquint::FieldPartition)
RQUINT_JSON_SERIALIZER(rquint::ObstructionCandidate)
RQUINT_JSON_SERIALIZER(rquint::NgCount)
RQUINT_JSON_SERIALIZER(rquint::RhoEntry)
RQUINT_JSON_SERIALIZER(rquint::DensityReport)

#undef RQUINT_JSON_SERIALIZER

// std::optional<T> as null or T.
template <typename T>
struct adl_serializer<std::optional<T>> {
    static void to_json(json& j, const std::optional<T>& v) {
        if (v) {
            j = *v;
        } else {
            j = nullptr;
        }
    }
    static std::optional<T> from_json(const json& j) {
        if (j.is_null()) return std::nullopt;
        return j.get<T>();
    }
};

}  // namespace nlohmann
