#pragma once

// Grid classification of F_{n,A,B}, the A = 8k+1, B = 8t+1 family and the
// discriminant-based partition of monogenic records into fields.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rquint/dedekind.hpp"
#include "rquint/galois.hpp"
#include "rquint/quintinomial.hpp"

namespace rquint {

enum class ResidueFilter { Mod4_11, Mod4_Other, None };

const char* to_string(ResidueFilter f);
ResidueFilter residue_filter_from_string(const std::string& s);
/// (A mod 4, B mod 4) in {(1,1)} or {(1,3),(3,1),(3,3)}, or anything.
bool passes(ResidueFilter f, const Int& A, const Int& B);

struct IntRange {
    long lo;
    long hi;  // inclusive
};

struct SearchRecord {
    QuinParams params;
    QuinInvariants invariants;
    MonogenicityVerdict verdict;
    GaloisClass galois;
    std::optional<Int> field_disc;  // present iff Monogenic
    friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

/// Full classification of one polynomial.
SearchRecord classify_record(const QuinParams& params, std::uint64_t seed = 0,
                             std::uint64_t budget = kDefaultBudget);

/// One record per pair passing the filter with A*B != 0, in row-major order
/// (A outer, B inner) regardless of `jobs`.
std::vector<SearchRecord> grid_classify(int n, IntRange A, IntRange B, ResidueFilter filter,
                                        std::uint64_t seed = 0, std::uint64_t budget = kDefaultBudget,
                                        unsigned jobs = 1);

struct FamilyRecord {
    Int k, t;
    /// The family's own expressions 8t-16k+1, 8t+16k+5, 32t-64k^2-16k-5.
    Int W1, W2, W3;
    /// Squarefreeness of W1 W2 W3; nullopt on budget exhaustion.
    std::optional<bool> g_squarefree;
    SearchRecord record;
    friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

/// Records for (A, B) = (8k+1, 8t+1) with t over the primes of t_range, or
/// over all integers of t_range when primes_only is false. Throws
/// std::logic_error if the family expressions disagree with invariants()
/// beyond the sign of W3.
std::vector<FamilyRecord> prime_family(long k, IntRange t_range, bool primes_only = true, std::uint64_t seed = 0,
                                       std::uint64_t budget = kDefaultBudget, unsigned jobs = 1);

/// The first `count` primes t >= 2 with W1 W2 W3 certified squarefree.
std::vector<FamilyRecord> prime_family_first_squarefree(long k, std::size_t count, std::uint64_t seed = 0,
                                                 std::uint64_t budget = kDefaultBudget);

struct FieldClass {
    Int disc;
    std::vector<std::size_t> members;  // indices into the input
    /// Collisions only: whether some pair satisfies W1W2(p1) = W1W2(p2) and
    /// W3(p1) = +-W3(p2).
    std::optional<bool> equations_hold;
    friend bool operator==(const FieldClass&, const FieldClass&) = default;
};

struct FieldPartition {
    std::vector<FieldClass> classes;  // ascending disc
    bool all_distinct;
    friend bool operator==(const FieldPartition&, const FieldPartition&) = default;
};

/// Groups monogenic records by discriminant. Throws std::invalid_argument on
/// any non-monogenic record.
FieldPartition distinct_fields(const std::vector<SearchRecord>& records);

std::string csv_header();
std::string csv_row(const SearchRecord& r);

}  // namespace rquint
