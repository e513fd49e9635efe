#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "korselt/constructors.hpp"
#include "korselt/core.hpp"
#include "korselt/oracle.hpp"
#include "korselt/output.hpp"

namespace kc = korselt;
namespace kcli = korselt::cli;

namespace {

constexpr unsigned long kDefaultSeed = 561;

kc::Int parse_int(const std::string& text) {
    const kc::Rational r = kc::Rational::parse(text);
    if (!r.is_integer()) throw kc::domain_error("expected an integer, got '" + text + "'");
    return r.num();
}

std::string int_str(const kc::Int& n) { return n.get_str(); }

kcli::Json set_json(const kc::KorseltSet& set) {
    kcli::Json arr = kcli::Json::array();
    for (const kc::Rational& r : set.members()) arr.push_back(r.str());
    return arr;
}

kcli::Json rationals_json(const std::vector<kc::Rational>& values) {
    kcli::Json arr = kcli::Json::array();
    for (const kc::Rational& r : values) arr.push_back(r.str());
    return arr;
}

const char* case_name(kc::GeneratorCase c) {
    switch (c) {
    case kc::GeneratorCase::below_q: return "below_q";
    case kc::GeneratorCase::multiple_of_q: return "multiple_of_q";
    case kc::GeneratorCase::mixed: return "mixed";
    }
    return "?";
}

struct Ctx {
    std::string format = "table";
    std::string output_path;
    std::vector<kcli::OutputRecord> records;
    int exit_code = 0;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// ---- oracle-diff ----------------------------------------------------------

struct DiffOptions {
    unsigned long weights_q_max = 50; // primes strictly below
    unsigned long weights_l_max = 6;
    unsigned long sets_q_max = 13; // primes up to and including
    unsigned long sets_l_max = 4;
    std::string max_den = "6";
    unsigned long samples = 10000;
    unsigned long seed = kDefaultSeed;
};

void diff_record(Ctx& ctx, std::size_t& mismatches, const std::string& check,
                 const std::string& q, const std::string& l, const std::string& detail,
                 bool match, double ms) {
    if (!match) ++mismatches;
    kcli::OutputRecord rec;
    rec.command = "oracle-diff";
    rec.inputs = kcli::Json::object();
    rec.result = {{"check", check}, {"q", q}, {"l", l}, {"detail", detail},
                  {"match", match}};
    rec.provenance = "oracle";
    rec.timing_ms = ms;
    ctx.records.push_back(std::move(rec));
}

void run_oracle_diff(Ctx& ctx, const DiffOptions& opt) {
    std::size_t mismatches = 0;
    std::size_t comparisons = 0;

    // Weight formula against the enumerated integer set.
    for (kc::Int q(2); q < opt.weights_q_max; q = kc::next_prime(q)) {
        for (unsigned long l = 2; l <= opt.weights_l_max; ++l) {
            Timer t;
            const kc::PrimePower pp(q, l);
            const kc::Int w = kc::kw_z(pp);
            const bool match = w == kc::Int(static_cast<unsigned long>(kc::ks_z(pp).weight()));
            ++comparisons;
            diff_record(ctx, mismatches, "weight", int_str(q), std::to_string(l),
                        "weight=" + int_str(w), match, t.ms());
        }
    }

    // Closed-form sets against the literal scans.
    const kc::Int max_den = parse_int(opt.max_den);
    for (kc::Int q(2); q <= opt.sets_q_max; q = kc::next_prime(q)) {
        for (unsigned long l = 2; l <= opt.sets_l_max; ++l) {
            const kc::PrimePower pp(q, l);

            Timer tz;
            const kc::KorseltSet closed_z = kc::ks_z(pp);
            const bool match_z = closed_z == kc::oracle::brute_ks_z(pp.value, pp.value);
            ++comparisons;
            diff_record(ctx, mismatches, "set-z", int_str(q), std::to_string(l),
                        "members=" + std::to_string(closed_z.weight()), match_z, tz.ms());

            Timer tq;
            const kc::Int num_bound = 3 * pp.value;
            std::vector<kc::Rational> boxed;
            const kc::KorseltSet swept = kc::ks_q_bounded(pp, max_den);
            for (const kc::Rational& r : swept.members()) {
                if (::abs(r.num()) <= num_bound && r.den() <= max_den) boxed.push_back(r);
            }
            const kc::KorseltSet closed_q = kc::KorseltSet::of(std::move(boxed), pp.value);
            const bool match_q =
                closed_q == kc::oracle::brute_ks_box(pp.value, {num_bound, max_den});
            ++comparisons;
            diff_record(ctx, mismatches, "set-q", int_str(q), std::to_string(l),
                        "members=" + std::to_string(closed_q.weight()), match_q, tq.ms());
        }
    }

    // Pseudorandom predicate agreement; the scheme below is fixed so a seed
    // pins the exact sample sequence.
    if (opt.samples > 0) {
        Timer ts;
        std::mt19937_64 rng(opt.seed);
        const unsigned long qs[] = {2, 3, 5, 7, 11, 13};
        std::size_t agree = 0;
        std::size_t done = 0;
        while (done < opt.samples) {
            const unsigned long q = qs[rng() % 6];
            const unsigned long l = 2 + rng() % 3;
            const kc::PrimePower pp(kc::Int(q), l);
            const long num_bound = 3 * mpz_get_si(pp.value.get_mpz_t());
            const long a = static_cast<long>(rng() % (2 * num_bound + 1)) - num_bound;
            const unsigned long b = 1 + rng() % 12;
            if (a == 0) continue;
            const kc::Rational alpha{kc::Int(a), kc::Int(b)};
            if (alpha.is_integer() && alpha.num() == pp.value) continue;
            ++done;
            if (kc::is_prime_power_base(pp, alpha) ==
                kc::oracle::brute_is_korselt(pp.value, alpha))
                ++agree;
        }
        ++comparisons;
        diff_record(ctx, mismatches, "samples", "", "",
                    "agree=" + std::to_string(agree) + "/" + std::to_string(done),
                    agree == done, ts.ms());
    }

    diff_record(ctx, mismatches, "summary", "", "",
                "comparisons=" + std::to_string(comparisons) +
                    ",mismatches=" + std::to_string(mismatches),
                mismatches == 0, 0.0);
    if (mismatches > 0) ctx.exit_code = 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Korselt sets, weights and base constructions for prime powers q^l"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_option("--format", ctx.format, "Output format")
        ->check(CLI::IsMember({"table", "json-lines", "csv"}))
        ->capture_default_str();
    app.add_option("--output", ctx.output_path, "Write output to a file instead of stdout");

    // Common option targets; each subcommand binds the ones it uses.
    std::string q_text, n_text, alpha_text, beta_text, s_text, d_text, m_text;
    std::string p_text, k_text, max_den_text = "10", branch = "coprime", route = "coprime";
    unsigned long l = 2, k_exp = 2, count = 2, m_limit = 64;
    int sign = 1;
    bool with_witnesses = false;
    unsigned long factor_bound = kc::kDefaultFactorBound;
    DiffOptions diff;

    const auto add_pp = [&](CLI::App* sub) {
        sub->add_option("--q", q_text, "Prime q")->required();
        sub->add_option("--l", l, "Exponent l >= 2")->required();
    };
    const auto make_pp = [&] { return kc::PrimePower(parse_int(q_text), l); };
    const auto pp_inputs = [&] {
        return kcli::Json{{"q", q_text}, {"l", std::to_string(l)}};
    };
    const auto push = [&](std::string command, kcli::Json inputs, kcli::Json result,
                          double ms, std::string note = "") {
        kcli::OutputRecord rec;
        rec.command = std::move(command);
        rec.inputs = std::move(inputs);
        rec.result = std::move(result);
        rec.note = std::move(note);
        rec.timing_ms = ms;
        ctx.records.push_back(std::move(rec));
    };

    // check
    {
        CLI::App* sub = app.add_subcommand("check", "Test whether alpha is a Korselt base of N");
        sub->add_option("--n", n_text, "The number N >= 2")->required();
        sub->add_option("--alpha", alpha_text, "Base candidate a or a/b")->required();
        sub->add_option("--factor-bound", factor_bound, "Trial-division budget for factoring N")
            ->capture_default_str();
        sub->callback([&] {
            Timer t;
            const bool member =
                kc::is_korselt(parse_int(n_text), kc::Rational::parse(alpha_text), factor_bound);
            push("check", {{"n", n_text}, {"alpha", alpha_text}}, member, t.ms());
        });
    }

    // set-z
    {
        CLI::App* sub = app.add_subcommand("set-z", "Integer Korselt set of q^l");
        add_pp(sub);
        sub->callback([&] {
            Timer t;
            push("set-z", pp_inputs(), set_json(kc::ks_z(make_pp())), t.ms());
        });
    }

    // set-q
    {
        CLI::App* sub =
            app.add_subcommand("set-q", "Rational Korselt set of q^l up to a denominator bound");
        add_pp(sub);
        sub->add_option("--max-den", max_den_text, "Largest reduced denominator")
            ->capture_default_str();
        sub->callback([&] {
            Timer t;
            const auto set = kc::ks_q_bounded(make_pp(), parse_int(max_den_text));
            kcli::Json inputs = pp_inputs();
            inputs["max_den"] = max_den_text;
            push("set-q", std::move(inputs), set_json(set), t.ms());
        });
    }

    // set-interval
    {
        CLI::App* sub =
            app.add_subcommand("set-interval", "Korselt set of q^l restricted to [-1,1[");
        add_pp(sub);
        sub->add_flag("--witnesses", with_witnesses, "Emit the (d, den) witnesses instead");
        sub->callback([&] {
            Timer t;
            const kc::PrimePower pp = make_pp();
            kcli::Json result;
            std::size_t size = 0;
            if (with_witnesses) {
                result = kcli::Json::array();
                for (const auto& family : {kc::ks_interval_pos(pp), kc::ks_interval_neg(pp)}) {
                    for (const kc::IntervalBaseWitness& w : family) {
                        result.push_back({{"d", int_str(w.d)},
                                          {"den", int_str(w.den)},
                                          {"value", w.value.str()}});
                        ++size;
                    }
                }
            } else {
                const kc::KorseltSet set = kc::ks_interval(pp);
                size = set.weight();
                result = set_json(set);
            }
            push("set-interval", pp_inputs(), std::move(result), t.ms(),
                 size == 0 ? "the interval set is empty exactly when l = 2" : "");
        });
    }

    // weight
    {
        CLI::App* sub = app.add_subcommand("weight", "Integer Korselt weight of q^l");
        add_pp(sub);
        sub->callback([&] {
            Timer t;
            push("weight", pp_inputs(), int_str(kc::kw_z(make_pp())), t.ms());
        });
    }

    // bounds
    {
        CLI::App* sub = app.add_subcommand("bounds", "Inclusive bounds every base respects");
        add_pp(sub);
        sub->add_option("--branch", branch, "coprime (on alpha) or divisible (on alpha/q)")
            ->check(CLI::IsMember({"coprime", "divisible"}))
            ->capture_default_str();
        sub->callback([&] {
            Timer t;
            const auto [lo, hi] = kc::base_bounds(make_pp(), branch == "coprime"
                                                                 ? kc::BoundBranch::coprime
                                                                 : kc::BoundBranch::divisible);
            kcli::Json inputs = pp_inputs();
            inputs["branch"] = branch;
            push("bounds", std::move(inputs), {{"lo", lo.str()}, {"hi", hi.str()}}, t.ms());
        });
    }

    // intersect
    {
        CLI::App* sub = app.add_subcommand(
            "intersect", "Exponent m with KS(q^l) intersect KS(q^k) = KS(q^m)");
        sub->add_option("--l", l, "First exponent")->required();
        sub->add_option("--k", k_exp, "Second exponent")->required();
        sub->callback([&] {
            Timer t;
            const unsigned long m = kc::intersection_exponent(l, k_exp);
            push("intersect", {{"l", std::to_string(l)}, {"k", std::to_string(k_exp)}},
                 std::to_string(m), t.ms());
        });
    }

    // lift
    {
        CLI::App* sub =
            app.add_subcommand("lift", "Lift an integer base to q + (beta-q)/s");
        add_pp(sub);
        sub->add_option("--beta", beta_text, "Integer base candidate")->required();
        sub->add_option("--s", s_text, "Denominator s >= 2, coprime to beta - q")->required();
        sub->callback([&] {
            Timer t;
            const kc::PrimePower pp = make_pp();
            const kc::Int beta = parse_int(beta_text);
            const kc::Rational lifted = kc::lift_base(pp, beta, parse_int(s_text));
            kcli::Json inputs = pp_inputs();
            inputs["beta"] = beta_text;
            inputs["s"] = s_text;
            push("lift", std::move(inputs),
                 {{"value", lifted.str()},
                  {"beta_member", kc::ks_member(pp, kc::Rational(beta))},
                  {"value_member", kc::ks_member(pp, lifted)}},
                 t.ms());
        });
    }

    // mirror
    {
        CLI::App* sub = app.add_subcommand(
            "mirror", "Mirror a base with q | numerator to a2*q/a1'");
        add_pp(sub);
        sub->add_option("--alpha", alpha_text, "Base with numerator divisible by q")->required();
        sub->callback([&] {
            Timer t;
            const kc::PrimePower pp = make_pp();
            const kc::Rational alpha = kc::Rational::parse(alpha_text);
            const kc::Rational mirrored = kc::mirror_base(pp, alpha);
            kcli::Json inputs = pp_inputs();
            inputs["alpha"] = alpha_text;
            push("mirror", std::move(inputs),
                 {{"value", mirrored.str()},
                  {"alpha_member", kc::ks_member(pp, alpha)},
                  {"value_member", kc::ks_member(pp, mirrored)}},
                 t.ms());
        });
    }

    // generate
    {
        CLI::App* sub = app.add_subcommand(
            "generate", "Base generated by a divisor d with phi(d) | l-1");
        add_pp(sub);
        sub->add_option("--d", d_text, "Generator d")->required();
        sub->add_option("--m", m_text, "Case parameter; scanned when omitted");
        sub->add_option("--m-limit", m_limit, "Scan limit for m")->capture_default_str();
        sub->callback([&] {
            Timer t;
            const kc::PrimePower pp = make_pp();
            const kc::Int d = parse_int(d_text);
            const kc::GeneratedBase base =
                m_text.empty() ? kc::first_base_from_divisor(pp, d, static_cast<long>(m_limit))
                               : kc::bases_from_divisor(pp, d, parse_int(m_text));
            kcli::Json inputs = pp_inputs();
            inputs["d"] = d_text;
            if (!m_text.empty()) inputs["m"] = m_text;
            push("generate", std::move(inputs),
                 {{"d", int_str(base.d)},
                  {"case", case_name(base.case_tag)},
                  {"m", int_str(base.m)},
                  {"value", base.value.str()}},
                 t.ms());
        });
    }

    // find-powers
    {
        CLI::App* sub = app.add_subcommand(
            "find-powers", "A prime power admitting alpha, by route");
        sub->add_option("--alpha", alpha_text, "Nonzero base")->required();
        sub->add_option("--route", route, "coprime (gcd(a1,p)=1) or dividing (q | a1)")
            ->check(CLI::IsMember({"coprime", "dividing"}))
            ->capture_default_str();
        sub->callback([&] {
            Timer t;
            const kc::Rational alpha = kc::Rational::parse(alpha_text);
            kcli::Json result;
            std::string note;
            if (route == "coprime") {
                const kc::Construction c = kc::prime_power_for_base_coprime(alpha);
                result = {{"route", "coprime"},
                          {"q", int_str(c.pp.q)},
                          {"l", std::to_string(c.pp.l)}};
            } else {
                const kc::DividingSearch s = kc::prime_power_for_base_dividing(alpha);
                if (s.infeasible()) {
                    kcli::Json blocked = kcli::Json::array();
                    for (const kc::BlockedPrime& b : s.blocked)
                        blocked.push_back(
                            {{"q", int_str(b.q)}, {"residue", int_str(b.residue)}});
                    result = {{"route", "dividing"},
                              {"infeasible", true},
                              {"blocked", std::move(blocked)}};
                    note = "every prime divisor of the numerator divides a2 - a1/q";
                } else {
                    result = {{"route", "dividing"},
                              {"q", int_str(s.construction->pp.q)},
                              {"l", std::to_string(s.construction->pp.l)}};
                }
            }
            push("find-powers", {{"alpha", alpha_text}, {"route", route}}, std::move(result),
                 t.ms(), std::move(note));
        });
    }

    // family
    {
        CLI::App* sub = app.add_subcommand(
            "family", "Several prime powers admitting alpha");
        sub->add_option("--alpha", alpha_text, "Nonzero base")->required();
        sub->add_option("--count", count, "How many prime powers")->capture_default_str();
        sub->callback([&] {
            Timer t;
            kcli::Json result = kcli::Json::array();
            for (const kc::Construction& c :
                 kc::base_family(kc::Rational::parse(alpha_text), count)) {
                result.push_back({{"q", int_str(c.pp.q)}, {"l", std::to_string(c.pp.l)}});
            }
            push("family", {{"alpha", alpha_text}, {"count", std::to_string(count)}},
                 std::move(result), t.ms());
        });
    }

    // unit-fractions
    {
        CLI::App* sub = app.add_subcommand(
            "unit-fractions", "Unit-fraction bases +-1/q^(s-1) of q^l");
        add_pp(sub);
        sub->callback([&] {
            Timer t;
            push("unit-fractions", pp_inputs(),
                 rationals_json(kc::unit_fraction_bases(make_pp())), t.ms());
        });
    }

    // reciprocity
    {
        CLI::App* sub = app.add_subcommand(
            "reciprocity", "Memberships of sign/p in KS(q^l) and sign/q in KS(p^l)");
        sub->add_option("--p", p_text, "First prime")->required();
        sub->add_option("--q", q_text, "Second prime")->required();
        sub->add_option("--l", l, "Exponent")->required();
        sub->add_option("--sign", sign, "+1 or -1")->capture_default_str();
        sub->callback([&] {
            Timer t;
            const auto [first, second] =
                kc::reciprocal_pair_holds(parse_int(p_text), parse_int(q_text), l, sign);
            push("reciprocity",
                 {{"p", p_text},
                  {"q", q_text},
                  {"l", std::to_string(l)},
                  {"sign", std::to_string(sign)}},
                 {{"first", first}, {"second", second}, {"equal", first == second}}, t.ms());
        });
    }

    // feasible-primes
    {
        CLI::App* sub = app.add_subcommand(
            "feasible-primes", "All primes coprime to the numerator admitting alpha at exponent l");
        sub->add_option("--alpha", alpha_text, "Base outside {0, 1}")->required();
        sub->add_option("--l", l, "Exponent")->required();
        sub->callback([&] {
            Timer t;
            kcli::Json result = kcli::Json::array();
            for (const kc::Int& q : kc::feasible_primes(kc::Rational::parse(alpha_text), l))
                result.push_back(int_str(q));
            push("feasible-primes", {{"alpha", alpha_text}, {"l", std::to_string(l)}},
                 std::move(result), t.ms());
        });
    }

    // witness-prime
    {
        CLI::App* sub = app.add_subcommand(
            "witness-prime", "Smallest prime q with alpha outside KS(q^2)");
        sub->add_option("--alpha", alpha_text, "Base outside {0, 1}")->required();
        sub->callback([&] {
            Timer t;
            push("witness-prime", {{"alpha", alpha_text}},
                 int_str(kc::witness_prime(kc::Rational::parse(alpha_text))), t.ms());
        });
    }

    // oracle-diff
    {
        CLI::App* sub = app.add_subcommand(
            "oracle-diff", "Compare every closed form against the brute-force scan");
        sub->add_option("--weights-q-max", diff.weights_q_max, "Weight grid: primes below this")
            ->capture_default_str();
        sub->add_option("--weights-l-max", diff.weights_l_max, "Weight grid: largest exponent")
            ->capture_default_str();
        sub->add_option("--sets-q-max", diff.sets_q_max, "Set grid: primes up to this")
            ->capture_default_str();
        sub->add_option("--sets-l-max", diff.sets_l_max, "Set grid: largest exponent")
            ->capture_default_str();
        sub->add_option("--max-den", diff.max_den, "Set grid: denominator bound")
            ->capture_default_str();
        sub->add_option("--samples", diff.samples, "Random predicate agreement samples")
            ->capture_default_str();
        sub->add_option("--seed", diff.seed, "Seed for the sample sequence")
            ->capture_default_str();
        sub->callback([&] { run_oracle_diff(ctx, diff); });
    }

    // Let --format / --output appear after the subcommand too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const kc::budget_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const kc::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    const auto format = kcli::parse_format(ctx.format);
    const std::string payload = kcli::emit(ctx.records, *format);
    if (ctx.output_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(ctx.output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open '" << ctx.output_path << "' for writing\n";
            return 1;
        }
        out << payload;
        if (!out.good()) {
            std::cerr << "error: write to '" << ctx.output_path << "' failed\n";
            return 1;
        }
    }
    return ctx.exit_code;
}
