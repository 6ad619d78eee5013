#ifndef CYCLONUM_SERIALIZATION_HPP
#define CYCLONUM_SERIALIZATION_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclo_integers.hpp"
#include "cyclotomy.hpp"
#include "harness.hpp"
#include "vanishing_sums.hpp"

namespace cyclonum {

using json = nlohmann::json;

// Integers that may exceed 64 bits are emitted as decimal strings.
inline json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return json(static_cast<i64>(v.get_si()));
    return json(v.get_str());
}

inline mpz_class mpz_from_json(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(static_cast<long>(j.get<i64>()));
}

// --- cyclotomic number tables ---------------------------------------------

// Headerless CSV, one row per first index.
inline std::string table_csv(const CyclotomicTable& t) {
    std::ostringstream os;
    for (const auto& row : t.counts) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ',';
            os << row[j];
        }
        os << '\n';
    }
    return os.str();
}

inline json to_json(const CyclotomicTable& t) {
    json counts = json::array();
    for (const auto& row : t.counts) counts.push_back(row);
    return json{{"p", t.p}, {"n", t.n}, {"e", t.e}, {"k", t.k}, {"counts", counts}};
}

// --- cyclotomic integers ----------------------------------------------------

inline json to_json(const CycInt& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(mpz_to_json(c));
    return json{{"k", f.k}, {"coeffs", coeffs}};
}

inline CycInt cycint_from_json(const json& j) {
    std::vector<mpz_class> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(mpz_from_json(c));
    return CycInt(j.at("k").get<u64>(), std::move(coeffs));
}

// --- root sums ---------------------------------------------------------------

inline json to_json(const RootSum& s) {
    json terms = json::array();
    for (const auto& t : s.terms)
        terms.push_back(json{{"num", mpz_to_json(t.coeff.get_num())},
                             {"den", mpz_to_json(t.coeff.get_den())},
                             {"exp", t.exp}});
    return json{{"m", s.m}, {"terms", terms}};
}

inline RootSum rootsum_from_json(const json& j) {
    std::vector<RootTerm> terms;
    for (const auto& t : j.at("terms")) {
        mpq_class c(mpz_from_json(t.at("num")), mpz_from_json(t.at("den")));
        c.canonicalize();
        terms.push_back({std::move(c), t.at("exp").get<u64>()});
    }
    return make_root_sum(j.at("m").get<u64>(), std::move(terms));
}

// --- verification reports ----------------------------------------------------

inline json to_json(const TheoremRecord& r) {
    json ws = json::array();
    for (const auto& w : r.witnesses)
        ws.push_back(json{{"a", w.a}, {"b", w.b}, {"value", w.value}, {"expected", w.expected}});
    return json{{"id", r.id},
                {"premise", r.premise},
                {"checked", r.conclusion_checked},
                {"holds", r.conclusion_holds},
                {"status", to_string(r.status())},
                {"witnesses", ws}};
}

// The timing field is opt-in so that identical invocations produce
// byte-identical output.
inline json to_json(const VerificationReport& rep, bool include_timing = false) {
    json records = json::array();
    for (const auto& r : rep.records) records.push_back(to_json(r));
    json j{{"p", rep.p},
           {"n", rep.n},
           {"q", rep.q},
           {"e", rep.e},
           {"k", rep.k},
           {"stats",
            json{{"min", rep.stats.min},
                 {"max", rep.stats.max},
                 {"max_dev", rep.stats.max_deviation.get_str()}}},
           {"records", records}};
    if (include_timing) j["ms"] = rep.ms;
    return j;
}

inline VerificationReport report_from_json(const json& j) {
    VerificationReport rep;
    rep.p = j.at("p").get<u64>();
    rep.n = j.at("n").get<unsigned>();
    rep.q = j.at("q").get<u64>();
    rep.e = j.at("e").get<u64>();
    rep.k = j.at("k").get<u64>();
    rep.stats.min = j.at("stats").at("min").get<i64>();
    rep.stats.max = j.at("stats").at("max").get<i64>();
    rep.stats.max_deviation = mpq_class(j.at("stats").at("max_dev").get<std::string>());
    for (const auto& rj : j.at("records")) {
        TheoremRecord r;
        r.id = rj.at("id").get<std::string>();
        r.premise = rj.at("premise").get<bool>();
        r.conclusion_checked = rj.at("checked").get<bool>();
        r.conclusion_holds = rj.at("holds").get<bool>();
        r.unsupported = rj.at("status").get<std::string>() == "unsupported";
        for (const auto& wj : rj.at("witnesses"))
            r.witnesses.push_back({wj.at("a").get<u64>(), wj.at("b").get<u64>(),
                                   wj.at("value").get<i64>(), wj.at("expected").get<i64>()});
        rep.records.push_back(std::move(r));
    }
    if (j.contains("ms")) rep.ms = j.at("ms").get<double>();
    return rep;
}

inline const std::vector<std::string>& report_column_ids() {
    static const std::vector<std::string> ids = {
        "all_le3",        "prime_all_le2",       "diag00_exact",  "row0_bound",
        "col0_bound",     "diag_bound",          "mixed_le2",     "prime_00_exact",
        "prime_col0_diag_le2", "prime_row0_le2", "prime_mixed_le2"};
    return ids;
}

// One line per config: the config columns, the table spread, then one
// status column per theorem id ("na" where the theorem does not apply).
inline std::string reports_csv(const std::vector<VerificationReport>& reps) {
    std::ostringstream os;
    os << "p,n,q,e,k,min,max,max_dev";
    for (const auto& id : report_column_ids()) os << ',' << id;
    os << '\n';
    for (const auto& rep : reps) {
        os << rep.p << ',' << rep.n << ',' << rep.q << ',' << rep.e << ',' << rep.k << ','
           << rep.stats.min << ',' << rep.stats.max << ',' << rep.stats.max_deviation.get_str();
        for (const auto& id : report_column_ids()) {
            const TheoremRecord* found = nullptr;
            for (const auto& r : rep.records)
                if (r.id == id) { found = &r; break; }
            os << ',' << (found ? to_string(found->status()) : "na");
        }
        os << '\n';
    }
    return os.str();
}

// --- fermat reports -----------------------------------------------------------

inline json to_json(const FermatReport& r) {
    json vs = json::array();
    for (const auto& [x, y] : r.violations) vs.push_back(json::array({x, y}));
    const char* outcome = "";
    switch (r.outcome) {
        case FermatOutcome::PremiseFailed: outcome = "premise-failed"; break;
        case FermatOutcome::TwoIsPower: outcome = "two-is-eth-power"; break;
        case FermatOutcome::Verified: outcome = "verified"; break;
        case FermatOutcome::Counterexample: outcome = "counterexample"; break;
    }
    return json{{"p", r.p},
                {"e", r.e},
                {"k", r.k},
                {"premise", r.premise},
                {"two_is_eth_power", r.two_is_power},
                {"mode", r.mode == FermatMode::Exhaustive ? "exhaustive" : "sampled"},
                {"pairs_checked", r.pairs_checked},
                {"violation_count", r.violation_count},
                {"violations", vs},
                {"outcome", outcome}};
}

} // namespace cyclonum

#endif
