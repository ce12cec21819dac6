// Command-line driver: classify, search, family, density, pell, verify.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "acceptance.hpp"
#include "rquint/density.hpp"
#include "rquint/error.hpp"
#include "rquint/lucas_pell.hpp"
#include "rquint/search.hpp"
#include "rquint/serialize.hpp"

namespace {

using namespace rquint;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;

struct Global {
    bool json = false;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    std::uint64_t prime_bound = 1000;
    std::uint64_t trunc_L = 100;
};

// "lo:hi" or "lo..hi", or a single value.
IntRange parse_range(const std::string& text) {
    std::size_t sep = text.find("..");
    std::size_t skip = 2;
    if (sep == std::string::npos) {
        sep = text.find(':');
        skip = 1;
    }
    try {
        if (sep == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        return {std::stol(text.substr(0, sep)), std::stol(text.substr(sep + skip))};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed range '" + text + "' (expected lo:hi)");
    }
}

Json header(const Global& g, const std::string& command) {
    return Json{{"command", command}, {"seed", g.seed}, {"budget", g.budget}};
}

void print_header(const Global& g, const std::string& command) {
    std::cout << "# rquint " << command << "  seed=" << g.seed << "  budget=" << g.budget << "\n";
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string pattern_string(const std::vector<std::pair<int, unsigned>>& pattern) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [deg, mult] : pattern) {
        for (unsigned i = 0; i < mult; ++i) {
            os << (first ? "" : ",") << deg;
            first = false;
        }
    }
    os << '}';
    return os.str();
}

int cmd_classify(const Global& g, int n, const std::string& a, const std::string& b) {
    const QuinParams params(n, Int(a), Int(b));
    const IntPoly T = build(params);
    const Int formula = disc_formula(params);
    std::optional<Int> subres;
    if (n <= 3) subres = discriminant(T);
    std::optional<Irreducibility> irr;
    std::string irr_error;
    try {
        irr = irreducible(params);
    } catch (const std::invalid_argument& e) {
        irr_error = e.what();
    }
    const SearchRecord rec = classify_record(params, g.seed, g.budget);
    std::optional<GaloisClass> frob;
    if (n == 2 && irr && irr->irreducible) frob = frobenius_fingerprint(params.A, params.B, g.prime_bound);

    if (g.json) {
        Json j{{"header", header(g, "classify")},
               {"polynomial", T},
               {"disc_formula", formula},
               {"disc_subresultant", subres},
               {"irreducible", nullptr},
               {"record", rec},
               {"frobenius", frob}};
        if (irr) {
            j["irreducible"] = Json{{"irreducible", irr->irreducible},
                                    {"method", irr->method},
                                    {"certificate", irr->certificate}};
        }
        std::cout << j.dump() << "\n";
    } else {
        print_header(g, "classify");
        const auto& inv = rec.invariants;
        std::cout << "F_{" << n << "," << params.A << "," << params.B << "}(x) = " << T.pretty() << "\n";
        std::cout << "W1 = " << inv.W1 << "  W2 = " << inv.W2 << "  W3 = " << inv.W3 << "\n";
        std::cout << "P = " << inv.P << "  Q = " << inv.Q << "  R = " << inv.R << "\n";
        std::cout << "discriminant (closed form): " << formula << "\n";
        if (subres) {
            std::cout << "discriminant (subresultant): " << *subres << (*subres == formula ? "  [agrees]" : "  [MISMATCH]")
                      << "\n";
        }
        if (irr) {
            std::cout << "irreducible over Q: " << (irr->irreducible ? "yes" : "no") << "  (" << irr->method << ")\n";
            if (irr->certificate) {
                std::cout << "  certificate " << to_string(irr->certificate->kind) << ":\n";
                for (const auto& f : irr->certificate->factors) std::cout << "    " << f.pretty() << "\n";
                if (irr->certificate->st) {
                    std::cout << "    (s, t) = (" << irr->certificate->st->first << ", " << irr->certificate->st->second
                              << ")\n";
                }
                if (irr->certificate->s0s1) {
                    std::cout << "    S0 = " << irr->certificate->s0s1->first.pretty()
                              << "  S1 = " << irr->certificate->s0s1->second.pretty() << "\n";
                }
            }
        } else {
            std::cout << "irreducible over Q: undecided  (" << irr_error << ")\n";
        }
        const auto& v = rec.verdict;
        std::cout << "monogenic: " << to_string(v.status);
        if (!v.obstruction_primes.empty()) std::cout << "  obstruction primes {" << join(v.obstruction_primes) << "}";
        std::cout << "  (" << v.reason << ")\n";
        for (const auto& o : v.outcomes) {
            std::cout << "  q = " << o.q << ": " << (o.divides_index ? "divides" : "does not divide") << " the index\n"
                      << "    h1 = " << o.h1.pretty() << "\n    h2 = " << o.h2.pretty() << "\n    F = " << o.F.pretty()
                      << "\n    gcd(F, h1, h2) mod q = " << o.gcd_witness.lift().pretty() << "\n";
        }
        if (rec.field_disc) std::cout << "field discriminant: " << *rec.field_disc << "\n";
        std::cout << "galois: " << to_string(rec.galois.label) << "\n";
        for (const auto& s : rec.galois.squares) {
            std::cout << "  " << s.quantity << " = " << s.value << (s.is_square ? "  square" : "  not a square") << "\n";
        }
        if (frob) {
            std::cout << "frobenius (primes <= " << g.prime_bound << ", " << frob->primes_scanned << " scanned): ";
            if (frob->certified) {
                const auto& e = frob->frobenius.back();
                std::cout << "cycle type " << pattern_string(e.pattern) << " at q = " << e.prime << " certifies D4\n";
            } else {
                std::cout << "no transposition found; consistent with C4\n";
            }
        }
    }
    if (rec.verdict.budget_exhausted) return kExitBudget;
    return irr ? kExitOk : kExitError;
}

bool any_budget(const std::vector<SearchRecord>& recs) {
    for (const auto& r : recs) {
        if (r.verdict.budget_exhausted) return true;
    }
    return false;
}

int cmd_search(const Global& g, int n, const std::string& a_range, const std::string& b_range, const std::string& filter,
               const std::string& csv_path) {
    const auto recs = grid_classify(n, parse_range(a_range), parse_range(b_range), residue_filter_from_string(filter),
                                    g.seed, g.budget, g.jobs);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot write " + csv_path);
        csv << csv_header() << "\n";
        for (const auto& r : recs) csv << csv_row(r) << "\n";
    }
    if (g.json) {
        Json h = header(g, "search");
        h["n"] = n;
        h["filter"] = filter;
        h["records"] = recs.size();
        std::cout << h.dump() << "\n";
        for (const auto& r : recs) std::cout << Json(r).dump() << "\n";
    } else {
        print_header(g, "search");
        std::cout << csv_header() << "\n";
        for (const auto& r : recs) std::cout << csv_row(r) << "\n";
    }
    return any_budget(recs) ? kExitBudget : kExitOk;
}

int cmd_family(const Global& g, long k, const std::string& t_range, bool all_t) {
    const auto fam = prime_family(k, parse_range(t_range), !all_t, g.seed, g.budget, g.jobs);
    std::vector<SearchRecord> mono;
    bool budget = false;
    for (const auto& f : fam) {
        if (f.record.verdict.status == MonoStatus::Monogenic) mono.push_back(f.record);
        budget = budget || !f.g_squarefree || f.record.verdict.budget_exhausted;
    }
    const FieldPartition part = distinct_fields(mono);
    if (g.json) {
        Json h = header(g, "family");
        h["k"] = k;
        std::cout << Json{{"header", h}, {"records", fam}, {"distinct_fields", part}}.dump() << "\n";
    } else {
        print_header(g, "family");
        std::cout << "A = 8k+1 = " << 8 * k + 1 << ", B = 8t+1; W3 below is the family's 32t-64k^2-16k-5\n";
        std::cout << std::setw(8) << "t" << std::setw(10) << "B" << std::setw(10) << "W1" << std::setw(10) << "W2"
                  << std::setw(12) << "W3" << "  G sqfree  status        galois  field disc\n";
        for (const auto& f : fam) {
            const auto& r = f.record;
            std::cout << std::setw(8) << f.t << std::setw(10) << r.params.B << std::setw(10) << f.W1 << std::setw(10)
                      << f.W2 << std::setw(12) << f.W3 << "  " << std::setw(8)
                      << (f.g_squarefree ? (*f.g_squarefree ? "yes" : "no") : "unknown") << "  " << std::left
                      << std::setw(13) << to_string(r.verdict.status) << " " << std::setw(7) << to_string(r.galois.label)
                      << std::right << " " << (r.field_disc ? r.field_disc->get_str() : "-") << "\n";
        }
        std::cout << "distinct fields: " << part.classes.size() << " classes over " << mono.size()
                  << " monogenic records" << (part.all_distinct ? " (all distinct)" : "") << "\n";
        for (const auto& c : part.classes) {
            if (c.members.size() < 2) continue;
            std::cout << "  unresolved collision at disc " << c.disc << "; equal-discriminant conditions "
                      << (c.equations_hold.value_or(false) ? "hold" : "fail") << "\n";
        }
    }
    return budget ? kExitBudget : kExitOk;
}

int cmd_density(const Global& g, const std::string& factors, std::uint64_t X) {
    const FactoredPoly G = parse_factored(factors);
    const DensityReport r = density_report(G, g.trunc_L, X, g.budget);
    if (g.json) {
        Json h = header(g, "density");
        h["factors"] = factors;
        std::cout << Json{{"header", h}, {"report", r}}.dump() << "\n";
    } else {
        print_header(g, "density");
        std::cout << "G(t) = " << G.expand().pretty('t') << "  (degree " << G.degree() << ")\n";
        std::cout << "obstruction candidates (l <= (deg G + 2)/2):\n";
        for (const auto& c : r.candidates) {
            std::cout << "  l = " << c.ell << ": N_l = " << c.linear_factors << ", bound (N_l + 2)/2 "
                      << (c.within_bound ? "admits" : "excludes") << " l, "
                      << (c.obstructed ? "OBSTRUCTED" : "no obstruction") << "\n";
        }
        std::cout << "obstruction primes: {" << join(r.obstruction_primes) << "}\n";
        std::cout << std::setw(6) << "l" << std::setw(10) << "rho" << std::setw(10) << "l(l-1)" << "\n";
        for (const auto& e : r.rho_table) {
            std::cout << std::setw(6) << e.ell << std::setw(10) << e.rho << std::setw(10) << e.phi << "\n";
        }
        std::cout << "C_G truncated at L = " << r.truncation_bound << ": " << r.cg_decimal << "\n";
        std::cout << "  exact: " << r.cg.get_str() << "\n";
        std::cout << "N_G(" << r.ng.X << ") = " << r.ng.count << (r.ng.certified ? "  (certified)" : "")
                  << (r.ng.unknown ? "  unknown: " + std::to_string(r.ng.unknown) : "") << "\n";
    }
    return r.certified ? kExitOk : kExitBudget;
}

int cmd_pell(const Global& g, long max_n) {
    if (max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
    Json rows = Json::array();
    if (!g.json) {
        print_header(g, "pell");
        std::cout << std::setw(4) << "n" << std::setw(16) << "L_{2n-1}" << std::setw(16) << "F_{2n-1}" << std::setw(16)
                  << "A" << std::setw(16) << "B" << "  note\n";
    }
    for (long n = 1; n <= max_n; ++n) {
        const auto [L, F] = pell_solution(n);
        const auto ab = ab_from_pell(n);
        std::string note;
        if (ab) {
            const QuinInvariants inv = invariants(ab->first, ab->second);
            if (n % 6 == 4) {
                const Int l = lucas(n + 1);
                note = "R=" + inv.R.get_str() + (inv.R == l * l ? "=" : "!=") + "L_" + std::to_string(n + 1) + "^2";
            } else if (n % 6 == 1) {
                const Int l = lucas(n - 2);
                note = "P=" + inv.P.get_str() + (inv.P == l * l ? "=" : "!=") + "L_" + std::to_string(n - 2) + "^2";
            }
        } else {
            note = "no pair";
        }
        if (g.json) {
            Json row{{"n", n}, {"L", L}, {"F", F}, {"A", nullptr}, {"B", nullptr}, {"note", note}};
            if (ab) {
                row["A"] = ab->first;
                row["B"] = ab->second;
            }
            rows.push_back(row);
        } else {
            std::cout << std::setw(4) << n << std::setw(16) << L << std::setw(16) << F << std::setw(16)
                      << (ab ? ab->first.get_str() : "-") << std::setw(16) << (ab ? ab->second.get_str() : "-") << "  "
                      << note << "\n";
        }
    }
    if (g.json) std::cout << Json{{"header", header(g, "pell")}, {"rows", rows}}.dump() << "\n";
    return kExitOk;
}

int cmd_verify(const Global& g, const std::vector<int>& only) {
    acceptance::Options opts;
    opts.seed = g.seed ? g.seed : opts.seed;
    opts.jobs = g.jobs;
    std::vector<acceptance::Result> results;
    if (!g.json) {
        std::cout << "# rquint verify  seed=" << opts.seed << "  budget=" << g.budget << "  jobs=" << opts.jobs << "\n";
    }
    auto report = [&](const acceptance::Result& r) {
        if (!g.json) std::cout << r.line() << std::endl;
        results.push_back(r);
    };
    if (only.empty()) {
        acceptance::run_all(opts, report);
    } else {
        for (int id : only) report(acceptance::run_criterion(id, opts));
    }
    int failed = 0;
    for (const auto& r : results) failed += !r.passed();
    if (g.json) {
        Json arr = Json::array();
        for (const auto& r : results) {
            arr.push_back(Json{{"id", r.id},
                               {"title", r.title},
                               {"passed", r.passed()},
                               {"correct", r.correct},
                               {"seconds", r.seconds},
                               {"limit_seconds", r.limit_seconds},
                               {"detail", r.detail}});
        }
        Json h = header(g, "verify");
        h["seed"] = opts.seed;
        std::cout << Json{{"header", h}, {"results", arr}, {"failed", failed}}.dump() << "\n";
    } else {
        std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
    }
    return failed ? kExitError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reciprocal quintinomials x^(2^n) + A x^(3*2^(n-2)) + B x^(2^(n-1)) + A x^(2^(n-2)) + 1"};
    app.require_subcommand(1);
    Global g;
    app.add_flag("--json", g.json, "Emit JSON instead of text");
    app.add_option("--seed", g.seed, "Seed for randomized splitting and sampling");
    app.add_option("--budget", g.budget, "Pollard rho iteration budget per factorization")->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "Worker threads for grid work")->check(CLI::Range(1u, 1024u));
    app.add_option("--prime-bound", g.prime_bound, "Largest prime scanned by the Frobenius fingerprint")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
    app.add_option("--trunc-L", g.trunc_L, "Truncation bound for the density Euler product")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{65535}));

    int n = 2;
    std::string a_text, b_text;
    auto* classify = app.add_subcommand("classify", "Classify one F_{n,A,B}");
    classify->add_option("n", n, "Exponent n >= 2")->required();
    classify->add_option("A", a_text, "Coefficient A")->required();
    classify->add_option("B", b_text, "Coefficient B")->required();

    int search_n = 2;
    std::string a_range = "-11:13", b_range = "-11:13", filter = "mod4-11", csv_path;
    auto* search = app.add_subcommand("search", "Classify every pair of a grid (JSON lines with --json)");
    search->add_option("--n", search_n, "Exponent n")->check(CLI::Range(2, kMaxIrreducibilityN));
    search->add_option("--A-range", a_range, "Range lo:hi for A");
    search->add_option("--B-range", b_range, "Range lo:hi for B");
    search->add_option("--filter", filter, "mod4-11, mod4-other or none");
    search->add_option("--csv", csv_path, "Also write a CSV summary to this file");

    long k = 0;
    std::string t_range = "2:200";
    bool all_t = false;
    auto* family = app.add_subcommand("family", "The A = 8k+1, B = 8t+1 quartics over prime t");
    family->add_option("--k", k, "Fixed k");
    family->add_option("--t-range", t_range, "Range lo:hi for t");
    family->add_flag("--all-t", all_t, "Use every integer t, not only primes");

    std::string factors;
    std::uint64_t X = 10000;
    auto* density = app.add_subcommand("density", "Squarefree values of a factored G(t) at primes");
    density->add_option("--factors", factors, "Factors as \"c0,c1|c0,c1,c2|...\" (ascending)")->required();
    density->add_option("--X", X, "Count primes p <= X")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000000}));

    long max_n = 10;
    auto* pell = app.add_subcommand("pell", "Solutions of X^2 - 5Y^2 = -4 and their coefficient pairs");
    pell->add_option("--max-n", max_n, "Rows n = 1..max-n")->check(CLI::Range(1L, 5000L));

    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--criterion", only, "Run only these criteria")->check(CLI::Range(1, acceptance::kCriterionCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (!curve_tables_selfcheck()) throw std::logic_error("embedded curve tables failed verification");
        if (*classify) return cmd_classify(g, n, a_text, b_text);
        if (*search) return cmd_search(g, search_n, a_range, b_range, filter, csv_path);
        if (*family) return cmd_family(g, k, t_range, all_t);
        if (*density) return cmd_density(g, factors, X);
        if (*pell) return cmd_pell(g, max_n);
        if (*verify) return cmd_verify(g, only);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
