// Command-line front end: cyclotomic number tables, norms and norm bounds
// of cyclotomic integers, vanishing root-sum queries, vanishing-transfer
// checks, the theorem verification grid, and the Fermat-style sweep.
//
// Exit codes: 0 = query answered / all assertions passed,
//             1 = a verified property failed (counterexample),
//             2 = usage error,
//             3 = resource limit exceeded.

#include <algorithm>
#include <array>
#include <atomic>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include <cyclonum/cyclonum.hpp>

namespace cn = cyclonum;

namespace {

cn::u64 memory_cap_from_env() {
    const char* s = std::getenv("CYCLONUM_MEMORY_CAP");
    if (!s || !*s) return cn::default_dlog_cap;
    char* end = nullptr;
    errno = 0;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (errno != 0 || end == s || *end != '\0' || v == 0)
        throw std::invalid_argument("CYCLONUM_MEMORY_CAP must be a positive integer");
    return v;
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << data;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<cn::i64> parse_coeff_list(const std::string& s) {
    std::vector<cn::i64> out;
    for (const auto& tok : split(s, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty coefficient in list: " + s);
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

// Terms are "coeff:exponent" pairs; coefficients may be rational ("-1/2:7").
std::vector<cn::RootTerm> parse_terms(const std::string& s) {
    std::vector<cn::RootTerm> out;
    for (const auto& tok : split(s, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
            throw std::invalid_argument("bad term '" + tok + "' (expected coeff:exponent)");
        const std::string cs = tok.substr(0, colon);
        const std::string es = tok.substr(colon + 1);
        mpq_class c;
        if (c.set_str(cs, 10) != 0)
            throw std::invalid_argument("bad coefficient '" + cs + "' in term '" + tok + "'");
        c.canonicalize();
        std::size_t pos = 0;
        unsigned long long e;
        try {
            e = std::stoull(es, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent '" + es + "' in term '" + tok + "'");
        }
        if (pos != es.size()) throw std::invalid_argument("bad exponent '" + es + "' in term '" + tok + "'");
        out.push_back({std::move(c), e});
    }
    return out;
}

// |x| for an exact square rational, else a sqrt(...) marker.
std::string sqrt_display(const mpq_class& b) {
    const mpz_class num = b.get_num(), den = b.get_den();
    if (num >= 0 && mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return mpq_class(rn, rd).get_str();
    }
    return "sqrt(" + b.get_str() + ")";
}

// ---------------------------------------------------------------- table ---

struct TableArgs {
    cn::u64 p = 0;
    unsigned n = 1;
    cn::u64 e = 0;
    std::string format = "csv";
    std::string out;
};

std::string table_pretty(const cn::CyclotomicTable& t) {
    std::ostringstream os;
    os << "cyclotomic numbers (a,b) for q=" << t.q << " (p=" << t.p << ", n=" << t.n
       << "), e=" << t.e << ", k=" << t.k << "\n";
    std::size_t w = 1;
    for (const auto& row : t.counts)
        for (cn::i64 c : row) w = std::max(w, std::to_string(c).size());
    w = std::max(w, std::to_string(t.e - 1).size());
    os << std::string(6, ' ');
    for (cn::u64 b = 0; b < t.e; ++b) os << ' ' << std::setw(static_cast<int>(w)) << b;
    os << '\n';
    for (cn::u64 a = 0; a < t.e; ++a) {
        os << std::setw(5) << a << ':';
        for (cn::u64 b = 0; b < t.e; ++b)
            os << ' ' << std::setw(static_cast<int>(w)) << t.counts[a][b];
        os << '\n';
    }
    return os.str();
}

int run_table(const TableArgs& a) {
    const cn::CyclotomyConfig cfg = cn::make_config(a.p, a.n, a.e);
    const cn::CyclotomicTable t = cn::compute_table(cfg, memory_cap_from_env());
    std::string data;
    if (a.format == "csv")
        data = cn::table_csv(t);
    else if (a.format == "json")
        data = cn::to_json(t).dump() + "\n";
    else
        data = table_pretty(t);
    write_output(a.out, data);
    return 0;
}

// ----------------------------------------------------------------- norm ---

struct NormArgs {
    cn::u64 k = 0;
    std::string coeffs;
    std::string format = "pretty";
    std::string out;
};

int run_norm(const NormArgs& a) {
    const cn::CycInt f = cn::make_cycint(a.k, parse_coeff_list(a.coeffs));
    const cn::GeneralNormBound gb = cn::norm_bound_general(f);
    const bool kprime = cn::is_prime(a.k);
    std::optional<cn::PrimeNormBound> pb;
    std::optional<mpz_class> circ;
    if (kprime) {
        pb = cn::norm_bound_prime(f);
        circ = cn::norm_via_circulant(f);
    }
    const bool circ_ok = !circ || *circ == gb.norm_value;
    const bool all_ok = gb.holds && (!pb || pb->holds) && circ_ok;

    mpq_class gen_bound_sq(gb.rhs, cn::mpz_pow(cn::euler_phi(a.k), cn::euler_phi(a.k)));
    gen_bound_sq.canonicalize();

    std::ostringstream os;
    if (a.format == "json") {
        cn::json j{{"k", f.k},
                   {"norm", cn::mpz_to_json(gb.norm_value)},
                   {"general",
                    cn::json{{"square_sum", cn::mpz_to_json(gb.square_sum)},
                             {"lhs", cn::mpz_to_json(gb.lhs)},
                             {"rhs", cn::mpz_to_json(gb.rhs)},
                             {"holds", gb.holds}}}};
        cn::json coeffs = cn::json::array();
        for (const auto& c : f.coeffs) coeffs.push_back(cn::mpz_to_json(c));
        j["coeffs"] = coeffs;
        if (gb.holds_power_form)
            j["general"]["power_form_holds"] = *gb.holds_power_form;
        if (pb) {
            j["prime"] = cn::json{{"zero_sum", pb->zero_sum_case},
                                  {"one_sided_max", cn::mpz_to_json(pb->one_sided_max)},
                                  {"bound", pb->bound.get_str()},
                                  {"holds", pb->holds}};
            j["circulant_norm"] = cn::mpz_to_json(*circ);
            j["circulant_matches"] = circ_ok;
        }
        os << j.dump() << '\n';
    } else {
        os << "norm: " << gb.norm_value.get_str() << '\n';
        os << "general bound: |norm| <= " << sqrt_display(gen_bound_sq) << "  (norm^2 * phi^phi = "
           << gb.lhs.get_str() << " vs k^phi * S^phi = " << gb.rhs.get_str() << ", "
           << (gb.holds ? "holds" : "VIOLATED") << ")\n";
        if (gb.holds_power_form)
            os << "power-form bound: norm^2 <= S^k "
               << (*gb.holds_power_form ? "holds" : "VIOLATED") << '\n';
        if (pb) {
            os << "prime-k bound: |norm| <= " << pb->bound.get_str() << "  ("
               << (pb->zero_sum_case ? "zero coefficient sum: k * A^(k-1)"
                                     : "nonzero coefficient sum: A^k / |sum|")
               << ", " << (pb->holds ? "holds" : "VIOLATED") << ")\n";
            os << "circulant cross-check: " << circ->get_str() << "  ("
               << (circ_ok ? "matches" : "MISMATCH") << ")\n";
        }
    }
    write_output(a.out, os.str());
    return all_ok ? 0 : 1;
}

// -------------------------------------------------------------- rootsum ---

struct RootSumArgs {
    cn::u64 m = 0;
    std::string terms;
    std::string op;
    std::string format = "pretty";
    std::string out;
};

int run_rootsum(const RootSumArgs& a) {
    const cn::RootSum s = cn::make_root_sum(a.m, parse_terms(a.terms));
    std::string result;
    int rc = 0;
    if (a.op == "vanishing") {
        result = cn::is_vanishing(s) ? "true" : "false";
    } else if (a.op == "minimal") {
        result = cn::is_minimal(s) ? "true" : "false";
    } else { // classify
        const cn::SumClass c = cn::classify_up_to_6(s);
        result = cn::to_string(c);
        if (c == cn::SumClass::Violation) rc = 1;
    }
    std::ostringstream os;
    if (a.format == "json") {
        cn::json j = cn::to_json(s);
        j["op"] = a.op;
        j["result"] = result;
        os << j.dump() << '\n';
    } else {
        os << a.op << ": " << result << '\n';
    }
    write_output(a.out, os.str());
    return rc;
}

// ------------------------------------------------------------- transfer ---

struct TransferArgs {
    cn::u64 p = 0;
    unsigned n = 1;
    cn::u64 e = 0;
    std::string coeffs;
    std::string format = "pretty";
    std::string out;
};

const char* form_name(cn::PremiseForm f) {
    switch (f) {
        case cn::PremiseForm::General: return "general";
        case cn::PremiseForm::PrimeZeroSum: return "prime-zero-sum";
        case cn::PremiseForm::PrimeNonzeroSum: return "prime-nonzero-sum";
    }
    return "";
}

int run_transfer(const TransferArgs& a) {
    const cn::CyclotomyConfig cfg = cn::make_config(a.p, a.n, a.e);
    const auto coeffs = parse_coeff_list(a.coeffs);
    if (coeffs.size() != cfg.k)
        throw std::invalid_argument("coefficient list must have length k = " +
                                    std::to_string(cfg.k));
    const cn::CycInt f = cn::make_cycint(cfg.k, coeffs);
    const cn::EquivalenceCheck chk = cn::check_equivalence(cfg, f);
    std::optional<bool> norm_div;
    if (chk.fq_zero) norm_div = cn::norm_congruence_check(cfg, f);
    const bool ok = chk.consistent && (!norm_div || *norm_div);

    std::ostringstream os;
    if (a.format == "json") {
        cn::json j{{"p", cfg.field.p},
                   {"n", cfg.field.n},
                   {"q", cfg.field.q},
                   {"e", cfg.e},
                   {"k", cfg.k},
                   {"fq_zero", chk.fq_zero},
                   {"c_zero", chk.c_zero},
                   {"consistent", chk.consistent}};
        cn::json cj = cn::json::array();
        for (const auto& c : f.coeffs) cj.push_back(cn::mpz_to_json(c));
        j["coeffs"] = cj;
        cn::json pj{{"form", form_name(chk.premise.form)},
                    {"ord", chk.premise.ord},
                    {"square_sum", cn::mpz_to_json(chk.premise.square_sum)},
                    {"coeff_sum", cn::mpz_to_json(chk.premise.coeff_sum)},
                    {"one_sided_max", cn::mpz_to_json(chk.premise.one_sided_max)},
                    {"verdict", chk.premise.verdict}};
        if (chk.premise.verdict_power_form)
            pj["power_form_verdict"] = *chk.premise.verdict_power_form;
        j["premise"] = pj;
        if (norm_div) j["norm_divisible"] = *norm_div;
        os << j.dump() << '\n';
    } else {
        os << "q=" << cfg.field.q << " (p=" << cfg.field.p << ", n=" << cfg.field.n
           << "), e=" << cfg.e << ", k=" << cfg.k << '\n';
        os << "f(g^e) = 0: " << (chk.fq_zero ? "true" : "false") << '\n';
        os << "f(zeta_k) = 0: " << (chk.c_zero ? "true" : "false") << '\n';
        os << "premise (" << form_name(chk.premise.form)
           << "): " << (chk.premise.verdict ? "holds" : "fails") << '\n';
        os << "consistent: " << (chk.consistent ? "true" : "false") << '\n';
        if (norm_div)
            os << "norm divisibility p^ord | N(f): " << (*norm_div ? "true" : "false") << '\n';
    }
    write_output(a.out, os.str());
    return ok ? 0 : 1;
}

// --------------------------------------------------------------- verify ---

struct VerifyArgs {
    cn::u64 qmax = 0;
    cn::u64 kmax = 0; // 0 = unbounded
    cn::u64 pmax = 0; // 0 = unbounded
    unsigned jobs = 1;
    std::string cache;
    std::string out;
    std::string summary;
    bool timings = false;
};

bool record_ids_current(const cn::VerificationReport& r, bool kprime) {
    static const std::vector<std::string> composite = {"all_le3",    "diag00_exact", "row0_bound",
                                                       "col0_bound", "diag_bound",   "mixed_le2"};
    static const std::vector<std::string> prime = {
        "all_le3",        "prime_all_le2", "diag00_exact",       "row0_bound",
        "col0_bound",     "diag_bound",    "mixed_le2",          "prime_00_exact",
        "prime_col0_diag_le2", "prime_row0_le2", "prime_mixed_le2"};
    const auto& want = kprime ? prime : composite;
    if (r.records.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (r.records[i].id != want[i]) return false;
    return true;
}

// Same sweep as grid_search, but configs whose full record set is already
// present in the cache file are not recomputed.  The cache is rewritten
// with everything known at the end.
bool grid_with_cache(const cn::GridBounds& bounds, unsigned jobs, cn::u64 cap,
                     const std::string& path, std::vector<cn::VerificationReport>& out) {
    if (bounds.q_max > cap)
        throw cn::resource_limit_error("verify: q_max = " + std::to_string(bounds.q_max) +
                                       " exceeds the table memory cap of " + std::to_string(cap) +
                                       " entries");
    const auto keys = cn::admissible_configs(bounds);
    using Key = std::array<cn::u64, 4>; // p, n, e, k
    std::map<Key, cn::VerificationReport> cache;
    {
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            cn::VerificationReport rep = cn::report_from_json(cn::json::parse(line));
            cache[{rep.p, rep.n, rep.e, rep.k}] = std::move(rep);
        }
    }
    std::vector<std::optional<cn::VerificationReport>> slots(keys.size());
    std::vector<char> need(keys.size(), 1);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        auto it = cache.find({keys[i].p, keys[i].n, keys[i].e, keys[i].k});
        if (it != cache.end() && record_ids_current(it->second, cn::is_prime(keys[i].k))) {
            slots[i] = it->second;
            need[i] = 0;
        }
    }
    auto run_one = [&](std::size_t i) {
        slots[i] = cn::verify_config(cn::make_config(keys[i].p, keys[i].n, keys[i].e), cap);
    };
    bool ok = true;
    if (jobs <= 1) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (need[i]) run_one(i);
            out.push_back(*slots[i]);
            if (!slots[i]->all_ok()) { ok = false; break; }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned width = static_cast<unsigned>(std::min<std::size_t>(jobs, keys.size()));
        for (unsigned w = 0; w < width; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < keys.size(); i = next.fetch_add(1))
                    if (need[i]) run_one(i);
            });
        for (auto& th : pool) th.join();
        for (const auto& slot : slots) {
            out.push_back(*slot);
            if (!slot->all_ok()) { ok = false; break; }
        }
    }
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (slots[i])
            cache[{keys[i].p, keys[i].n, keys[i].e, keys[i].k}] = *slots[i];
    std::vector<const cn::VerificationReport*> all;
    all.reserve(cache.size());
    for (const auto& kv : cache) all.push_back(&kv.second);
    std::sort(all.begin(), all.end(), [](const auto* x, const auto* y) {
        return std::tie(x->q, x->e, x->p, x->n, x->k) < std::tie(y->q, y->e, y->p, y->n, y->k);
    });
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open cache file: " + path);
    for (const auto* r : all) os << cn::to_json(*r).dump() << '\n';
    return ok;
}

int run_verify(const VerifyArgs& a) {
    cn::GridBounds bounds;
    bounds.q_max = a.qmax;
    if (a.kmax) bounds.k_max = a.kmax;
    if (a.pmax) bounds.p_max = a.pmax;
    const cn::u64 cap = memory_cap_from_env();
    std::vector<cn::VerificationReport> reports;
    bool ok;
    if (a.cache.empty())
        ok = cn::grid_search(
            bounds, [&](const cn::VerificationReport& r) { reports.push_back(r); }, a.jobs, cap);
    else
        ok = grid_with_cache(bounds, a.jobs, cap, a.cache, reports);

    std::ostringstream data;
    for (const auto& r : reports) data << cn::to_json(r, a.timings).dump() << '\n';
    write_output(a.out, data.str());
    if (!a.summary.empty()) {
        std::ofstream s(a.summary, std::ios::binary);
        if (!s) throw std::runtime_error("cannot open summary file: " + a.summary);
        s << cn::reports_csv(reports);
    }
    if (!ok) {
        const auto& bad = reports.back();
        std::cerr << "counterexample at q=" << bad.q << ", e=" << bad.e << ", k=" << bad.k << ":\n";
        for (const auto& rec : bad.records)
            if (rec.status() == cn::RecordStatus::Fail) {
                std::cerr << "  " << rec.id << ":";
                for (const auto& w : rec.witnesses)
                    std::cerr << " (a=" << w.a << ",b=" << w.b << ") value=" << w.value
                              << " expected=" << w.expected;
                std::cerr << '\n';
            }
        return 1;
    }
    std::cerr << "verified " << reports.size() << " configs, no counterexamples\n";
    return 0;
}

// --------------------------------------------------------------- fermat ---

struct FermatArgs {
    cn::u64 p = 0;
    cn::u64 e = 0;
    bool exhaustive = false;
    cn::u64 samples = 100000;
    std::string format = "pretty";
    std::string out;
};

int run_fermat(const FermatArgs& a) {
    cn::FermatMode mode = cn::FermatMode::Exhaustive;
    if (a.p > 2000 && !a.exhaustive) {
        mode = cn::FermatMode::Sampled;
        std::cerr << "p > 2000: sampling " << a.samples
                  << " pairs (pass --exhaustive for the full O(p^2) sweep)\n";
    }
    const cn::FermatReport rep = cn::fermat_check(a.p, a.e, mode, a.samples);
    std::ostringstream os;
    if (a.format == "json") {
        os << cn::to_json(rep).dump() << '\n';
    } else {
        os << "p=" << rep.p << ", e=" << rep.e << ", k=" << rep.k << '\n';
        os << "premise p^2 > 3^k: " << (rep.premise ? "true" : "false") << '\n';
        if (rep.premise) {
            os << "2 is an e-th power mod p: " << (rep.two_is_power ? "true" : "false") << '\n';
            if (!rep.two_is_power)
                os << "mode: " << (rep.mode == cn::FermatMode::Exhaustive ? "exhaustive" : "sampled")
                   << ", pairs checked: " << rep.pairs_checked << '\n';
        }
        const cn::json oj = cn::to_json(rep);
        os << "outcome: " << oj.at("outcome").get<std::string>() << '\n';
    }
    write_output(a.out, os.str());
    if (rep.outcome == cn::FermatOutcome::Counterexample) {
        std::cerr << "counterexamples (x, y with x^e + y^e a nonzero e-th power):";
        for (const auto& v : rep.violations) std::cerr << " (" << v.first << "," << v.second << ")";
        std::cerr << "\n  total: " << rep.violation_count << '\n';
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cyclotomic number tables, cyclotomic integer norms, "
                 "vanishing root sums, and theorem verification sweeps"};
    app.require_subcommand(1);

    TableArgs ta;
    auto* t = app.add_subcommand("table", "compute the e x e cyclotomic number table over F_q");
    t->add_option("--p", ta.p, "field characteristic (prime)")->required();
    t->add_option("--n", ta.n, "extension degree, q = p^n")->default_val(1u);
    t->add_option("--e", ta.e, "number of classes; e must divide q - 1")->required();
    t->add_option("--format", ta.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->default_val("csv");
    t->add_option("--out", ta.out, "write data to this file instead of stdout");

    NormArgs na;
    auto* nc = app.add_subcommand("norm", "norm and norm bounds of a cyclotomic integer");
    nc->add_option("--k", na.k, "root-of-unity order")->required();
    nc->add_option("--coeffs", na.coeffs, "comma-separated integer coefficients, length exactly k")
        ->required();
    nc->add_option("--format", na.format, "output format")
        ->check(CLI::IsMember({"pretty", "json"}))
        ->default_val("pretty");
    nc->add_option("--out", na.out, "write data to this file instead of stdout");

    RootSumArgs ra;
    auto* r = app.add_subcommand("rootsum", "vanishing / minimality / classification queries "
                                            "on sums of roots of unity");
    r->add_option("--m", ra.m, "common root order m")->required();
    r->add_option("--terms", ra.terms, "comma-separated coeff:exponent terms, e.g. 1:0,-1/2:3")
        ->required();
    r->add_option("--op", ra.op, "query to run")
        ->check(CLI::IsMember({"vanishing", "minimal", "classify"}))
        ->required();
    r->add_option("--format", ra.format, "output format")
        ->check(CLI::IsMember({"pretty", "json"}))
        ->default_val("pretty");
    r->add_option("--out", ra.out, "write data to this file instead of stdout");

    TransferArgs xa;
    auto* x = app.add_subcommand("transfer", "compare vanishing at the order-k field element "
                                             "with vanishing at a complex k-th root of unity");
    x->add_option("--p", xa.p, "field characteristic (prime)")->required();
    x->add_option("--n", xa.n, "extension degree, q = p^n")->default_val(1u);
    x->add_option("--e", xa.e, "number of classes; k = (q - 1) / e")->required();
    x->add_option("--coeffs", xa.coeffs, "comma-separated integer coefficients, length exactly k")
        ->required();
    x->add_option("--format", xa.format, "output format")
        ->check(CLI::IsMember({"pretty", "json"}))
        ->default_val("pretty");
    x->add_option("--out", xa.out, "write data to this file instead of stdout");

    VerifyArgs va;
    auto* v = app.add_subcommand("verify", "run the theorem verification sweep over all "
                                           "admissible configs");
    v->add_option("--qmax", va.qmax, "largest field size q to cover")->required();
    v->add_option("--kmax", va.kmax, "largest k to cover (0 = unbounded)")->default_val(0);
    v->add_option("--pmax", va.pmax, "largest characteristic to cover (0 = unbounded)")
        ->default_val(0);
    v->add_option("--jobs", va.jobs, "worker threads for the sweep")->default_val(1u);
    v->add_option("--cache", va.cache, "JSON Lines results cache; verified configs are skipped");
    v->add_option("--out", va.out, "write the JSON Lines report here instead of stdout");
    v->add_option("--summary", va.summary, "also write a per-config CSV summary here");
    v->add_flag("--timings", va.timings, "include per-config wall time in the reports");

    FermatArgs fa;
    auto* fm = app.add_subcommand("fermat", "check that x^e + y^e avoids nonzero e-th powers "
                                            "mod p when 2 is not an e-th power");
    fm->add_option("--p", fa.p, "prime modulus, p = ek + 1")->required();
    fm->add_option("--e", fa.e, "exponent; e must divide p - 1")->required();
    fm->add_flag("--exhaustive", fa.exhaustive, "force the O(p^2) sweep even for p > 2000");
    fm->add_option("--samples", fa.samples, "random pairs in sampled mode")->default_val(100000);
    fm->add_option("--format", fa.format, "output format")
        ->check(CLI::IsMember({"pretty", "json"}))
        ->default_val("pretty");
    fm->add_option("--out", fa.out, "write data to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (t->parsed()) return run_table(ta);
        if (nc->parsed()) return run_norm(na);
        if (r->parsed()) return run_rootsum(ra);
        if (x->parsed()) return run_transfer(xa);
        if (v->parsed()) return run_verify(va);
        if (fm->parsed()) return run_fermat(fa);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const cn::resource_limit_error& ex) {
        std::cerr << "resource limit: " << ex.what() << '\n';
        return 3;
    } catch (const cn::unsupported_case_error& ex) {
        std::cerr << "unsupported case: " << ex.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::logic_error& ex) {
        std::cerr << "property violated: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}
