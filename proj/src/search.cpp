#include "rquint/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rquint/primes.hpp"

namespace rquint {

namespace {

long mod4(const Int& v) { return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), 4)); }

// Runs f(i) for i in [0, count) on `jobs` threads; results land by index.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, F f) {
    std::vector<std::optional<T>> slots(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

void check_range(const IntRange& r, const char* name) {
    if (r.lo > r.hi) throw std::invalid_argument(std::string(name) + " range is empty");
}

}  // namespace

const char* to_string(ResidueFilter f) {
    switch (f) {
        case ResidueFilter::Mod4_11: return "mod4-11";
        case ResidueFilter::Mod4_Other: return "mod4-other";
        case ResidueFilter::None: return "none";
    }
    return "?";
}

ResidueFilter residue_filter_from_string(const std::string& s) {
    for (ResidueFilter f : {ResidueFilter::Mod4_11, ResidueFilter::Mod4_Other, ResidueFilter::None}) {
        if (s == to_string(f)) return f;
    }
    throw std::invalid_argument("unknown residue filter '" + s + "'");
}

bool passes(ResidueFilter f, const Int& A, const Int& B) {
    const long a = mod4(A), b = mod4(B);
    switch (f) {
        case ResidueFilter::Mod4_11: return a == 1 && b == 1;
        case ResidueFilter::Mod4_Other: return (a == 1 && b == 3) || (a == 3 && b == 1) || (a == 3 && b == 3);
        case ResidueFilter::None: return true;
    }
    return false;
}

SearchRecord classify_record(const QuinParams& params, std::uint64_t seed, std::uint64_t budget) {
    SearchRecord r{params, invariants(params.A, params.B), is_monogenic(params, seed, budget), {}, std::nullopt};
    bool irreducible = r.verdict.status != MonoStatus::Reducible;
    // An exhausted budget says nothing about irreducibility, which is decided separately for n <= 3.
    if (r.verdict.status == MonoStatus::Undecided) {
        irreducible = params.n == 2   ? quartic_irreducible(params.A, params.B).irreducible
                      : params.n == 3 ? !octic_family_membership(params.A, params.B)
                                      : false;
    }
    if (irreducible && hypothesis_mod4(params.A, params.B)) {
        if (params.n == 2) r.galois = quartic_galois(params.A, params.B);
        if (params.n == 3) r.galois = octic_wreath(params.A, params.B);
    }
    if (r.verdict.status == MonoStatus::Monogenic) r.field_disc = disc_formula(params);
    return r;
}

std::vector<SearchRecord> grid_classify(int n, IntRange A, IntRange B, ResidueFilter filter, std::uint64_t seed,
                                        std::uint64_t budget, unsigned jobs) {
    check_range(A, "A");
    check_range(B, "B");
    std::vector<QuinParams> cells;
    for (long a = A.lo; a <= A.hi; ++a) {
        for (long b = B.lo; b <= B.hi; ++b) {
            if (a == 0 || b == 0 || !passes(filter, a, b)) continue;
            cells.emplace_back(n, a, b);
        }
    }
    return parallel_map<SearchRecord>(cells.size(), jobs,
                                      [&](std::size_t i) { return classify_record(cells[i], seed, budget); });
}

namespace {

FamilyRecord family_record(long k, long t, std::uint64_t seed, std::uint64_t budget) {
    const Int K = k, T = t;
    FamilyRecord f{K,
                   T,
                   8 * T - 16 * K + 1,
                   8 * T + 16 * K + 5,
                   32 * T - 64 * K * K - 16 * K - 5,
                   std::nullopt,
                   classify_record(QuinParams(2, 8 * K + 1, 8 * T + 1), seed, budget)};
    const QuinInvariants& inv = f.record.invariants;
    // The family's W3 is the negative of A^2 - 4B + 8.
    if (f.W1 != inv.W1 || f.W2 != inv.W2 || f.W3 != -inv.W3) {
        throw std::logic_error("family expressions disagree with the invariants at t = " + T.get_str());
    }
    f.g_squarefree = squarefree(f.W1 * f.W2 * f.W3, budget);
    return f;
}

}  // namespace

std::vector<FamilyRecord> prime_family(long k, IntRange t_range, bool primes_only, std::uint64_t seed,
                                       std::uint64_t budget, unsigned jobs) {
    check_range(t_range, "t");
    std::vector<long> ts;
    for (long t = t_range.lo; t <= t_range.hi; ++t) {
        if (primes_only && (t < 2 || !is_prime_u64(static_cast<std::uint64_t>(t)))) continue;
        ts.push_back(t);
    }
    return parallel_map<FamilyRecord>(ts.size(), jobs,
                                      [&](std::size_t i) { return family_record(k, ts[i], seed, budget); });
}

std::vector<FamilyRecord> prime_family_first_squarefree(long k, std::size_t count, std::uint64_t seed,
                                                 std::uint64_t budget) {
    std::vector<FamilyRecord> out;
    for (long t = 2; out.size() < count; ++t) {
        if (!is_prime_u64(static_cast<std::uint64_t>(t))) continue;
        FamilyRecord f = family_record(k, t, seed, budget);
        if (f.g_squarefree.value_or(false)) out.push_back(std::move(f));
    }
    return out;
}

FieldPartition distinct_fields(const std::vector<SearchRecord>& records) {
    std::map<Int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const SearchRecord& r = records[i];
        if (r.verdict.status != MonoStatus::Monogenic || !r.field_disc) {
            throw std::invalid_argument("record " + std::to_string(i) + " is not monogenic");
        }
        groups[*r.field_disc].push_back(i);
    }
    FieldPartition out{{}, true};
    for (auto& [disc, members] : groups) {
        FieldClass c{disc, members, std::nullopt};
        if (members.size() > 1) {
            out.all_distinct = false;
            bool hold = false;
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    const auto& u = records[members[i]].invariants;
                    const auto& v = records[members[j]].invariants;
                    hold = hold || (u.W1 * u.W2 == v.W1 * v.W2 && (u.W3 == v.W3 || u.W3 == -v.W3));
                }
            }
            c.equations_hold = hold;
        }
        out.classes.push_back(std::move(c));
    }
    return out;
}

std::string csv_header() { return "n,A,B,W1,W2,W3,status,obstruction_primes,galois,field_disc"; }

std::string csv_row(const SearchRecord& r) {
    std::ostringstream os;
    os << r.params.n << ',' << r.params.A << ',' << r.params.B << ',' << r.invariants.W1 << ',' << r.invariants.W2
       << ',' << r.invariants.W3 << ',' << to_string(r.verdict.status) << ',';
    for (std::size_t i = 0; i < r.verdict.obstruction_primes.size(); ++i) {
        os << (i ? ";" : "") << r.verdict.obstruction_primes[i];
    }
    os << ',' << to_string(r.galois.label) << ',';
    if (r.field_disc) os << *r.field_disc;
    return os.str();
}

}  // namespace rquint
