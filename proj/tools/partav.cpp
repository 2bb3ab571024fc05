#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "partav/asymptotics.hpp"
#include "partav/containment.hpp"
#include "partav/enumeration.hpp"
#include "partav/equivalence.hpp"
#include "partav/gf_engine.hpp"
#include "partav/ratfunc.hpp"

using json = nlohmann::ordered_json;
using namespace partav;

namespace {

constexpr const char* kSchemaVersion = "1";

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const BigInt& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

json int_list_to_json(const std::vector<int>& xs) {
    json arr = json::array();
    for (int x : xs) arr.push_back(std::to_string(x));
    return arr;
}

std::string join_ints(const std::vector<int>& xs) {
    if (xs.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

// avoidance counts for n = 1..N, optionally split across threads
std::vector<long long> counts_brute(const Partition& mu, int N, int jobs) {
    std::vector<long long> counts(static_cast<std::size_t>(N), 0);
    if (N == 0) return counts;
    jobs = std::max(1, std::min(jobs, N));
    if (jobs == 1) {
        for (int n = 1; n <= N; ++n)
            counts[static_cast<std::size_t>(n) - 1] = av_count(mu, n);
        return counts;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{1};
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int n = next.fetch_add(1); n <= N; n = next.fetch_add(1))
                counts[static_cast<std::size_t>(n) - 1] = av_count(mu, n);
        });
    for (auto& th : pool) th.join();
    return counts;
}

void emit_counts(const Partition& mu, int n_max, const std::vector<std::string>& counts,
                 bool as_json) {
    if (as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["pattern"] = mu.str();
        doc["n_max"] = std::to_string(n_max);
        json arr = json::array();
        for (const auto& c : counts) arr.push_back(c);
        doc["counts"] = arr;
        std::cout << doc.dump() << "\n";
    } else {
        for (int n = 1; n <= n_max; ++n)
            std::cout << n << " " << counts[static_cast<std::size_t>(n) - 1] << "\n";
    }
}

std::vector<std::string> to_strings(const std::vector<long long>& counts) {
    std::vector<std::string> out;
    out.reserve(counts.size());
    for (long long c : counts) out.push_back(std::to_string(c));
    return out;
}

int cmd_contains(const std::string& alpha_text, const std::string& mu_text, bool want_witness,
                 bool use_oracle, bool as_json) {
    const Partition alpha = Partition::parse(alpha_text);
    const Partition mu = Partition::parse(mu_text);
    const bool result = use_oracle ? contains_oracle(alpha, mu) : contains(alpha, mu);
    std::optional<DeletionWitness> w;
    if (want_witness && result) w = witness(alpha, mu);
    if (as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["contains"] = result;
        if (w) {
            json jw;
            jw["rows"] = int_list_to_json(w->rows);
            jw["cols"] = int_list_to_json(w->cols);
            doc["witness"] = jw;
        }
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << (result ? "true" : "false") << "\n";
        if (w) {
            std::cout << "rows: " << join_ints(w->rows) << "\n";
            std::cout << "cols: " << join_ints(w->cols) << "\n";
        }
    }
    return result ? 0 : 1;
}

int cmd_count(const std::string& mu_text, int n_max, const std::string& method, int jobs,
              bool as_json) {
    const Partition mu = Partition::parse(mu_text);
    std::vector<long long> counts;
    if (method == "decomp") {
        counts.reserve(static_cast<std::size_t>(n_max));
        for (int n = 1; n <= n_max; ++n) counts.push_back(d_count(mu, n));
    } else {
        if (mu.empty()) fail(ErrorKind::EmptyPartition, "count needs a nonempty pattern");
        if (n_max > kDefaultEnumCap)
            fail(ErrorKind::CapExceeded, "count: --n-max above enumeration cap " +
                                             std::to_string(kDefaultEnumCap));
        counts = counts_brute(mu, n_max, jobs);
    }
    emit_counts(mu, n_max, to_strings(counts), as_json);
    return 0;
}

int cmd_series(const std::string& mu_text, int n_max, int jobs, bool as_json) {
    const Partition mu = Partition::parse(mu_text);
    std::vector<std::string> counts;
    if (!mu.empty() && classify(mu).is_super_strict) {
        const auto coeffs = gf_avoid(mu).series(n_max);
        counts.reserve(static_cast<std::size_t>(n_max));
        for (int n = 1; n <= n_max; ++n) {
            const BigRat& c = coeffs[static_cast<std::size_t>(n)];
            if (denominator(c) != 1)
                throw std::logic_error("non-integer series coefficient at n=" + std::to_string(n));
            counts.push_back(numerator(c).str());
        }
    } else {
        std::cerr << "note: pattern is not super-strict, falling back to enumeration\n";
        if (mu.empty()) fail(ErrorKind::EmptyPartition, "series needs a nonempty pattern");
        if (n_max > kDefaultEnumCap)
            fail(ErrorKind::CapExceeded, "series: --n-max above enumeration cap " +
                                             std::to_string(kDefaultEnumCap));
        counts = to_strings(counts_brute(mu, n_max, jobs));
    }
    emit_counts(mu, n_max, counts, as_json);
    return 0;
}

int cmd_gf(const std::string& mu_text, bool with_empty, bool as_json) {
    const Partition mu = Partition::parse(mu_text);
    RatFunc f = gf_avoid(mu);
    if (with_empty) f = f + RatFunc::from_int(1);
    if (as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["pattern"] = mu.str();
        doc["num"] = poly_to_json(f.num());
        doc["den"] = poly_to_json(f.den());
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << f.str() << "\n";
    }
    return 0;
}

int cmd_equiv(const std::string& p_text, const std::string& q_text, int n_max, bool as_json) {
    const Partition p = Partition::parse(p_text);
    const Partition q = Partition::parse(q_text);
    const bool rook_eq = fs_equal(p, q);
    const bool wilf = wilf_check(p, q, n_max);
    const Partition rep_p = strict_representative(p);
    const Partition rep_q = strict_representative(q);
    if (as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["rook_equivalent"] = rook_eq;
        doc["wilf_checked_to_N"] = wilf;
        doc["n_max"] = std::to_string(n_max);
        doc["strict_rep_p"] = rep_p.str();
        doc["strict_rep_q"] = rep_q.str();
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "rook_equivalent: " << (rook_eq ? "true" : "false") << "\n";
        std::cout << "wilf_checked_to_" << n_max << ": " << (wilf ? "true" : "false") << "\n";
        std::cout << "strict_rep_p: " << rep_p.str() << "\n";
        std::cout << "strict_rep_q: " << rep_q.str() << "\n";
    }
    return 0;
}

int cmd_asymptotics(const std::string& mu_text, const std::string& ns_text, bool as_json) {
    const Partition mu = Partition::parse(mu_text);
    std::vector<long long> ns;
    {
        std::string t = ns_text;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        long long v;
        while (in >> v) ns.push_back(v);
        if (ns.empty()) fail(ErrorKind::BadArgument, "asymptotics: empty --n list");
    }
    const auto rows = ratio_report(mu, ns);
    if (as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["pattern"] = mu.str();
        json arr = json::array();
        for (const auto& r : rows) {
            json jr;
            jr["n"] = std::to_string(r.n);
            jr["observed"] = r.observed.str();
            jr["predicted"] = fmt_double(r.predicted);
            jr["ratio"] = fmt_double(r.ratio);
            jr["source"] = r.source;
            for (const auto& [tag, value] : predict_variants(mu, r.n))
                if (tag != "primary") jr[tag + "_variant_predicted"] = fmt_double(value);
            arr.push_back(jr);
        }
        doc["rows"] = arr;
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << r.n << " " << r.observed.str() << " " << fmt_double(r.predicted) << " "
                      << fmt_double(r.ratio) << " (" << r.source << ")\n";
    }
    return 0;
}

int cmd_table(int n_max, bool as_json) {
    const char* pats[] = {"1", "2", "2,1", "3", "3,1", "4", "4,1", "4,2", "5"};
    bool all_ok = true;
    json arr = json::array();
    for (const char* pat : pats) {
        const Partition mu = Partition::parse(pat);
        bool ok = true;
        for (long long n = 1; n <= n_max; ++n) {
            const auto cf = closed_form(mu, n);
            if (!cf || *cf != av_count(mu, n)) {
                ok = false;
                break;
            }
        }
        all_ok = all_ok && ok;
        if (as_json) {
            json row;
            row["pattern"] = mu.str();
            row["ok"] = ok;
            arr.push_back(row);
        } else {
            std::cout << (ok ? "PASS" : "FAIL") << " (" << mu.str() << ")\n";
        }
    }
    if (as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["n_max"] = std::to_string(n_max);
        doc["rows"] = arr;
        doc["all_ok"] = all_ok;
        std::cout << doc.dump() << "\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pattern-avoidance toolkit for integer partitions"};
    app.require_subcommand(1);

    std::string alpha_text, mu_text, q_text, ns_text;
    int n_max = 20;
    int jobs = 1;
    std::string method = "brute";
    bool as_json = false, want_witness = false, use_oracle = false, with_empty = false;

    auto* c_contains = app.add_subcommand("contains", "decide whether alpha contains mu");
    c_contains->add_option("alpha", alpha_text)->required();
    c_contains->add_option("mu", mu_text)->required();
    c_contains->add_flag("--witness", want_witness, "print a deletion witness");
    c_contains->add_flag("--oracle", use_oracle, "use the slow deletion-closure oracle");
    c_contains->add_flag("--json", as_json);

    auto* c_count = app.add_subcommand("count", "count avoiders of mu for n = 1..N");
    c_count->add_option("mu", mu_text)->required();
    c_count->add_option("--n-max", n_max)->required();
    c_count->add_option("--method", method)->check(CLI::IsMember({"brute", "decomp"}));
    c_count->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_count->add_flag("--json", as_json);

    auto* c_series = app.add_subcommand("series", "avoidance counts from the generating function");
    c_series->add_option("mu", mu_text)->required();
    c_series->add_option("--n-max", n_max)->required();
    c_series->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    c_series->add_flag("--json", as_json);

    auto* c_gf = app.add_subcommand("gf", "rational generating function for a super-strict mu");
    c_gf->add_option("mu", mu_text)->required();
    c_gf->add_flag("--with-empty", with_empty, "add 1 for the empty partition's constant term");
    c_gf->add_flag("--json", as_json);

    auto* c_equiv = app.add_subcommand("equiv", "rook/Wilf equivalence report");
    c_equiv->add_option("p", alpha_text)->required();
    c_equiv->add_option("q", q_text)->required();
    c_equiv->add_option("--n-max", n_max);
    c_equiv->add_flag("--json", as_json);

    auto* c_asym = app.add_subcommand("asymptotics", "observed vs predicted counts");
    c_asym->add_option("mu", mu_text)->required();
    c_asym->add_option("--n", ns_text, "comma-separated n values")->required();
    c_asym->add_flag("--json", as_json);

    auto* c_table = app.add_subcommand("table", "closed forms vs enumeration");
    c_table->add_option("--n-max", n_max);
    c_table->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(c_table) && !c_table->count("--n-max")) n_max = 25;
        if (app.got_subcommand(c_contains))
            return cmd_contains(alpha_text, mu_text, want_witness, use_oracle, as_json);
        if (app.got_subcommand(c_count)) return cmd_count(mu_text, n_max, method, jobs, as_json);
        if (app.got_subcommand(c_series)) return cmd_series(mu_text, n_max, jobs, as_json);
        if (app.got_subcommand(c_gf)) return cmd_gf(mu_text, with_empty, as_json);
        if (app.got_subcommand(c_equiv)) return cmd_equiv(alpha_text, q_text, n_max, as_json);
        if (app.got_subcommand(c_asym)) return cmd_asymptotics(mu_text, ns_text, as_json);
        if (app.got_subcommand(c_table)) return cmd_table(n_max, as_json);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::CapExceeded ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
