// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is argv[1] (used by the last criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "korselt/constructors.hpp"
#include "korselt/core.hpp"
#include "korselt/oracle.hpp"

using namespace korselt;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

Rational rat(long num, long den = 1) { return {Int(num), Int(den)}; }

std::vector<Int> primes_below(unsigned long bound) {
    std::vector<Int> out;
    for (Int q(2); q < bound; q = next_prime(q)) out.push_back(q);
    return out;
}

// 1. kw_z(q,l) = 4*sigma0(q^(l-1)-1) - 2 = |ks_z(q,l)| for q < 50, l in 2..6.
std::string weight_formula() {
    std::size_t points = 0;
    for (const Int& q : primes_below(50)) {
        for (unsigned long l = 2; l <= 6; ++l) {
            const PrimePower pp(q, l);
            const Int w = kw_z(pp);
            const Int formula = 4 * sigma0(pow_int(q, l - 1) - 1) - 2;
            const Int size(static_cast<unsigned long>(ks_z(pp).weight()));
            require(w == formula && w == size,
                    "weight mismatch at q=" + q.get_str() + " l=" + std::to_string(l));
            ++points;
        }
    }
    return std::to_string(points) + " grid points, exact";
}

// 2. ks_z and ks_q_bounded match the brute-force scans for q <= 13, l in 2..4.
std::string oracle_equivalence() {
    std::size_t points = 0;
    for (const Int& q : primes_below(14)) {
        for (unsigned long l = 2; l <= 4; ++l) {
            const PrimePower pp(q, l);
            require(ks_z(pp) == oracle::brute_ks_z(pp.value, pp.value),
                    "ks_z mismatch at q=" + q.get_str() + " l=" + std::to_string(l));

            const Int num_bound = 3 * pp.value;
            const Int max_den(6);
            std::vector<Rational> boxed;
            const KorseltSet swept = ks_q_bounded(pp, max_den);
            for (const Rational& r : swept.members()) {
                if (::abs(r.num()) <= num_bound && r.den() <= max_den) boxed.push_back(r);
            }
            require(KorseltSet::of(std::move(boxed), pp.value) ==
                        oracle::brute_ks_box(pp.value, {num_bound, max_den}),
                    "ks_q mismatch at q=" + q.get_str() + " l=" + std::to_string(l));
            ++points;
        }
    }
    return std::to_string(points) + " grid points, exact";
}

// 3. The interval set is empty iff l = 2: empty for q < 100 at l = 2,
//    inhabited (with a verified witness) for q < 30 and l in 3..8.
std::string interval_emptiness() {
    for (const Int& q : primes_below(100)) {
        const PrimePower pp(q, 2);
        require(ks_interval(pp).weight() == 0, "nonempty interval set at q=" + q.get_str());
        require(ks_interval_empty(pp), "probe disagrees at q=" + q.get_str());
    }
    for (const Int& q : primes_below(30)) {
        for (unsigned long l = 3; l <= 8; ++l) {
            const PrimePower pp(q, l);
            const auto witness = first_interval_witness(pp);
            require(witness.has_value(),
                    "no interval member at q=" + q.get_str() + " l=" + std::to_string(l));
            require(ks_member(pp, witness->value), "witness fails the predicate");
            require(rat(-1) <= witness->value && witness->value < rat(1),
                    "witness outside [-1,1[");
        }
    }
    return "25 empty + 60 inhabited prime powers, exact";
}

// 4. The four attainment values are members and every enumerated member
//    respects the coprime/divisible bounds, for q < 30, l in 2..6.
std::string bound_attainment() {
    std::size_t points = 0;
    for (const Int& q : primes_below(30)) {
        for (unsigned long l = 2; l <= 6; ++l) {
            const PrimePower pp(q, l);
            const Rational attain[] = {
                Rational(pp.value + q, Int(2)),
                Rational(2 * q - pp.value),
                Rational(pow_int(q, l - 1) + q - 1),
                Rational(1 + q - pow_int(q, l - 1)),
            };
            for (const Rational& a : attain) {
                if (a.is_zero()) continue; // 2q - q^l = 0 only at q^l = 4
                require(ks_member(pp, a), "attainment value " + a.str() + " not a member at q=" +
                                              q.get_str() + " l=" + std::to_string(l));
            }

            const auto [lo_c, hi_c] = base_bounds(pp, BoundBranch::coprime);
            const auto [lo_d, hi_d] = base_bounds(pp, BoundBranch::divisible);
            const KorseltSet set = ks_q_bounded(pp, Int(6));
            for (const Rational& member : set.members()) {
                if (gcd(member.num(), q) == 1) {
                    require(lo_c <= member && member <= hi_c,
                            "coprime member " + member.str() + " outside bounds");
                } else {
                    const Rational scaled = member / Rational(q);
                    require(lo_d <= scaled && scaled <= hi_d,
                            "divisible member " + member.str() + " outside bounds");
                }
            }
            ++points;
        }
    }
    return std::to_string(points) + " grid points, exact";
}

// 5. Intersection law over the scan box for the pinned (l,k) pairs, and the
//    inclusion law for every (k-1) | (l-1) pair up to l = 9.
std::string structure_laws() {
    const std::pair<unsigned long, unsigned long> pairs[] = {{5, 7}, {4, 7}, {3, 5}};
    for (unsigned long qv : {2ul, 3ul, 5ul}) {
        const Int q(static_cast<long>(qv));
        for (const auto& [l, k] : pairs) {
            const unsigned long m = intersection_exponent(l, k);
            const PrimePower pl(q, l), pk(q, k), pm(q, m);
            const long bound = 3 * static_cast<long>(pow_int(q, std::max(l, k)).get_ui());
            for (long b = 1; b <= 6; ++b) {
                for (long a = -bound; a <= bound; ++a) {
                    if (a == 0 || std::gcd(a < 0 ? -a : a, b) != 1) continue;
                    const Rational alpha = rat(a, b);
                    // each set excludes its own N by fiat; skip those points
                    if (alpha == Rational(pl.value) || alpha == Rational(pk.value) ||
                        alpha == Rational(pm.value))
                        continue;
                    if ((ks_member(pl, alpha) && ks_member(pk, alpha)) != ks_member(pm, alpha))
                        throw Failure("intersection law fails at q=" + q.get_str() + " l=" +
                                      std::to_string(l) + " k=" + std::to_string(k) +
                                      " alpha=" + alpha.str());
                }
            }
        }

        for (unsigned long k = 2; k <= 9; ++k) {
            for (unsigned long l = k; l <= 9; ++l) {
                if ((l - 1) % (k - 1) != 0) continue;
                const PrimePower small(q, k), large(q, l);
                const KorseltSet set = ks_q_bounded(small, Int(6));
                for (const Rational& member : set.members()) {
                    if (member.is_integer() && member.num() == large.value) continue;
                    require(is_prime_power_base(large, member),
                            "inclusion fails at q=" + q.get_str() + " k=" + std::to_string(k) +
                                " l=" + std::to_string(l) + " alpha=" + member.str());
                }
            }
        }
    }
    return "3 primes x (3 intersection pairs + inclusion chains), exact";
}

// 6. Lifting preserves membership for every integer member and s in 2..7.
std::string lifting() {
    std::size_t lifts = 0;
    for (unsigned long qv : {2ul, 3ul, 5ul, 7ul}) {
        const Int q(static_cast<long>(qv));
        for (unsigned long l : {2ul, 3ul}) {
            const PrimePower pp(q, l);
            const KorseltSet z = ks_z(pp);
            for (const Rational& beta : z.members()) {
                for (long s = 2; s <= 7; ++s) {
                    if (gcd(Int(s), beta.num() - q) != 1) continue;
                    const Rational lifted = lift_base(pp, beta.num(), Int(s));
                    require(ks_member(pp, lifted),
                            "lift of member " + beta.str() + " by s=" + std::to_string(s) +
                                " lost membership at q=" + q.get_str() +
                                " l=" + std::to_string(l));
                    ++lifts;
                }
            }
        }
    }
    return std::to_string(lifts) + " lifts, exact";
}

// 7. Generators: every eligible d yields a verified base; the coprime route
//    succeeds on the whole |a1|, a2 <= 30 grid; the dividing route returns
//    the documented report for 6/5 and constructions for 4/3 and 9/5.
std::string generators() {
    std::size_t bases = 0;
    for (unsigned long qv : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        const Int q(static_cast<long>(qv));
        for (unsigned long l = 2; l <= 8; ++l) {
            const PrimePower pp(q, l);
            for (const Int& d : eligible_generators(l, Int(50))) {
                const GeneratedBase base = first_base_from_divisor(pp, d);
                require(is_prime_power_base(pp, base.value),
                        "unverified generated base at q=" + q.get_str() +
                            " l=" + std::to_string(l) + " d=" + d.get_str());
                ++bases;
            }
        }
    }

    std::size_t constructions = 0;
    for (long a = -30; a <= 30; ++a) {
        for (long b = 1; b <= 30; ++b) {
            if (a == 0 || std::gcd(a < 0 ? -a : a, b) != 1) continue;
            const Construction c = prime_power_for_base_coprime(rat(a, b));
            require(is_prime_power_base(c.pp, c.base) && gcd(c.base.num(), c.pp.q) == 1,
                    "coprime route failed for " + rat(a, b).str());
            ++constructions;
        }
    }

    const DividingSearch blocked = prime_power_for_base_dividing(rat(6, 5));
    require(blocked.infeasible() && blocked.blocked.size() == 2 &&
                blocked.blocked[0].q == 2 && blocked.blocked[1].q == 3,
            "6/5 should be infeasible with both 2 and 3 blocked");
    for (long num : {4l, 9l}) {
        const Rational alpha = num == 4 ? rat(4, 3) : rat(9, 5);
        const DividingSearch s = prime_power_for_base_dividing(alpha);
        require(!s.infeasible() && is_prime_power_base(s.construction->pp, alpha),
                "dividing route failed for " + alpha.str());
    }
    return std::to_string(bases) + " generated bases + " + std::to_string(constructions) +
           " coprime constructions, exact";
}

// 8. Reciprocity booleans agree on the grid; the even-l point (2,3,4,-1)
//    returns (false, true).
std::string reciprocity() {
    const std::vector<Int> ps = primes_below(24);
    for (const Int& p : ps) {
        for (const Int& q : ps) {
            if (p == q) continue;
            for (unsigned long l = 2; l <= 8; ++l) {
                const auto [x, y] = reciprocal_pair_holds(p, q, l, +1);
                require(x == y, "+1 equivalence fails at p=" + p.get_str() +
                                    " q=" + q.get_str() + " l=" + std::to_string(l));
            }
            for (unsigned long l = 3; l <= 9; l += 2) {
                const auto [x, y] = reciprocal_pair_holds(p, q, l, -1);
                require(x == y, "-1 equivalence fails at p=" + p.get_str() +
                                    " q=" + q.get_str() + " l=" + std::to_string(l));
            }
        }
    }
    const auto [x, y] = reciprocal_pair_holds(Int(2), Int(3), 4, -1);
    require(x == false && y == true, "(2,3,4,-1) must be (false, true)");
    return "72 ordered pairs x 11 exponents + pinned counterexample, exact";
}

// 9. feasible_primes matches an independent over-scan to 10x the bound.
std::string feasibility() {
    const Rational alphas[] = {rat(1, 2), rat(3), rat(-1)};
    std::size_t lists = 0;
    for (const Rational& alpha : alphas) {
        for (unsigned long l = 2; l <= 3; ++l) {
            const Rational bound =
                alpha + (alpha * Rational(pow_int(alpha.num(), l - 2)) -
                         Rational(pow_int(alpha.den(), l - 2)))
                            .abs();
            std::vector<Int> over_scan;
            for (Int q(2); Rational(q) <= bound * rat(10); q = next_prime(q)) {
                if (gcd(alpha.num(), q) != 1) continue;
                if (oracle::brute_is_korselt(pow_int(q, l), alpha)) over_scan.push_back(q);
            }
            require(feasible_primes(alpha, l) == over_scan,
                    "feasible_primes mismatch for " + alpha.str() + " l=" + std::to_string(l));
            ++lists;
        }
    }
    return std::to_string(lists) + " lists against the 10x over-scan, exact";
}

// ---- criterion 10: CLI determinism ----------------------------------------

int run_cli(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string strip_timing(const std::string& json_lines) {
    std::string out;
    std::istringstream in(json_lines);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(line);
        j.erase("timing_ms");
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string cli_determinism(const std::string& cli) {
    const std::string quoted = "'" + cli + "'";
    const std::string base = quoted + " oracle-diff --format json-lines";

    require(run_cli(base + " --output acceptance_diff_1.jsonl") == 0,
            "oracle-diff exited nonzero on the first run");
    require(run_cli(base + " --output acceptance_diff_2.jsonl") == 0,
            "oracle-diff exited nonzero on the second run");
    const std::string first = strip_timing(slurp("acceptance_diff_1.jsonl"));
    const std::string second = strip_timing(slurp("acceptance_diff_2.jsonl"));
    require(!first.empty(), "oracle-diff produced no records");
    require(first == second, "oracle-diff output differs between runs");

    const std::string csv_cmd = quoted + " set-q --q 5 --l 3 --max-den 6 --format csv";
    require(run_cli(csv_cmd + " --output acceptance_set_1.csv") == 0, "set-q exited nonzero");
    require(run_cli(csv_cmd + " --output acceptance_set_2.csv") == 0, "set-q exited nonzero");
    const std::string csv1 = slurp("acceptance_set_1.csv");
    require(!csv1.empty() && csv1 == slurp("acceptance_set_2.csv"),
            "csv output differs between runs");

    for (const char* f : {"acceptance_diff_1.jsonl", "acceptance_diff_2.jsonl",
                          "acceptance_set_1.csv", "acceptance_set_2.csv"})
        std::remove(f);
    return "oracle-diff exit 0, byte-identical reruns (timing stripped)";
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    int failures = 0;

    const auto run = [&](int number, const std::string& title,
                         const std::function<std::string()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = body();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
            ++failures;
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d: %s — %s (%.1f s)\n", ok ? "PASS" : "FAIL", number,
                    title.c_str(), detail.c_str(), seconds);
        std::fflush(stdout);
    };

    run(1, "weight formula", weight_formula);
    run(2, "oracle equivalence of the set enumerators", oracle_equivalence);
    run(3, "interval set empty iff l = 2", interval_emptiness);
    run(4, "bound attainment and soundness", bound_attainment);
    run(5, "intersection and inclusion laws", structure_laws);
    run(6, "lifting preserves membership", lifting);
    run(7, "generators and prime-power constructions", generators);
    run(8, "reciprocity equivalence", reciprocity);
    run(9, "feasible primes against the over-scan", feasibility);
    run(10, "CLI oracle-diff and determinism", [&] {
        require(!cli.empty(), "CLI path missing: pass the korselt binary as argv[1]");
        return cli_determinism(cli);
    });

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
