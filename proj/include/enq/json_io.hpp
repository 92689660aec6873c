#pragma once

// JSON shapes for fields, group parameters, polynomials, verification
// reports, and the JSONL candidate catalog.  Element codes travel as decimal
// strings so the same shape serves prime fields, extensions, and symbolic
// coefficients.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "enq/symbolic.hpp"
#include "enq/verify.hpp"

namespace enq {

using json = nlohmann::json;

inline json field_to_json(const FiniteField& F) {
    json j;
    j["p"] = F.p();
    j["k"] = F.k();
    j["modulus"] = F.modulus(); // c0 first, degree-k coefficient last
    return j;
}

inline const FiniteField& field_from_json(const json& j) {
    const FiniteField& F = make_field(j.at("p").get<uint32_t>(), j.at("k").get<int>());
    if (j.contains("modulus")) {
        auto mod = j.at("modulus").get<std::vector<uint32_t>>();
        if (mod != F.modulus())
            throw std::runtime_error("field modulus mismatch: catalog entry was written "
                                     "with a different tower convention");
    }
    return F;
}

inline json params_to_json(const QuadricSystem& sys) {
    json j;
    j["a"] = std::to_string(sys.a_code);
    j["b"] = std::to_string(sys.b_code);
    j["char"] = sys.field->p();
    return j;
}

// --- polynomial shape: {"vars": [...], "terms": [{"exp": [...], "coeff": "..."}]}

template <class R, class CoeffToString>
json poly_to_json(const Polynomial<R>& f, CoeffToString&& cs) {
    json j;
    j["vars"] = std::vector<std::string>(VAR_NAMES.begin(), VAR_NAMES.end());
    j["terms"] = json::array();
    for (auto& [e, c] : f.terms()) {
        json t;
        t["exp"] = std::vector<int>(e.begin(), e.end());
        t["coeff"] = cs(c);
        j["terms"].push_back(std::move(t));
    }
    return j;
}

inline json poly_to_json(const Polynomial<FieldElement>& f) {
    return poly_to_json(f, [](const FieldElement& c) { return c.to_string(); });
}

inline json poly_to_json(const Polynomial<Sym>& f) {
    return poly_to_json(f, [](const Sym& c) { return c.to_string(); });
}

template <class R, class CoeffFromString>
Polynomial<R> poly_from_json(const json& j, CoeffFromString&& cf) {
    Polynomial<R> f;
    for (auto& t : j.at("terms")) {
        auto ev = t.at("exp").get<std::vector<int>>();
        if (ev.size() != NVARS) throw std::runtime_error("polynomial term needs 6 exponents");
        Exp6 e{};
        for (std::size_t i = 0; i < NVARS; ++i) {
            if (ev[i] < 0 || ev[i] > 255) throw std::runtime_error("exponent out of range");
            e[i] = uint8_t(ev[i]);
        }
        f.add_term(e, cf(t.at("coeff").get<std::string>()));
    }
    return f;
}

inline Polynomial<FieldElement> poly_from_json(const json& j, const FiniteField& F) {
    return poly_from_json<FieldElement>(j, [&F](const std::string& s) {
        unsigned long long code = std::stoull(s);
        if (code >= F.q()) throw std::runtime_error("coefficient code out of range");
        return FieldElement(F, uint32_t(code));
    });
}

inline Polynomial<Sym> poly_from_json_symbolic(const json& j) {
    return poly_from_json<Sym>(j, [](const std::string& s) { return Sym::parse(s); });
}

// --- verification report

inline json report_to_json(const VerificationReport& r) {
    json j;
    j["rank_ok"] = r.rank_ok;
    j["invariance_ok"] = r.invariance_ok;
    j["hilbert_dims"] = std::vector<int>(r.hilbert_dims.begin(), r.hilbert_dims.end());
    j["hilbert_ok"] = r.hilbert_ok;
    j["planes"] = {{"plus_clear", r.plus_clear},
                   {"minus_clear", r.minus_clear},
                   {"max_ext", r.plane_max_ext}};
    json sm = json::object();
    for (auto& [t, n] : r.smooth_checked) sm[std::to_string(t)] = n;
    j["smooth_checked"] = std::move(sm);
    j["singular_points"] = json::array();
    for (auto& [t, pt] : r.singular_points)
        j["singular_points"].push_back({{"level", t}, {"point", std::vector<uint32_t>(pt.begin(), pt.end())}});
    json pc = json::object();
    for (auto& [t, c] : r.point_counts)
        pc[std::to_string(t)] = {{"cover", c.cover}, {"quotient", c.quotient}};
    j["point_counts"] = std::move(pc);
    j["weil_ok"] = r.weil_ok;
    j["psi_ok"] = r.psi_ok;
    j["status"] = r.status;
    j["accepted"] = r.accepted;
    return j;
}

inline VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.rank_ok = j.at("rank_ok").get<bool>();
    r.invariance_ok = j.at("invariance_ok").get<bool>();
    auto hd = j.at("hilbert_dims").get<std::vector<int>>();
    r.hilbert_dims.fill(-1);
    for (std::size_t i = 0; i < r.hilbert_dims.size() && i < hd.size(); ++i) r.hilbert_dims[i] = hd[i];
    r.hilbert_ok = j.at("hilbert_ok").get<bool>();
    r.plus_clear = j.at("planes").at("plus_clear").get<bool>();
    r.minus_clear = j.at("planes").at("minus_clear").get<bool>();
    r.plane_max_ext = j.at("planes").at("max_ext").get<int>();
    for (auto& [k, v] : j.at("smooth_checked").items())
        r.smooth_checked[std::stoi(k)] = v.get<unsigned long long>();
    for (auto& sp : j.at("singular_points")) {
        auto pv = sp.at("point").get<std::vector<uint32_t>>();
        Pt6 pt{};
        for (std::size_t i = 0; i < 6 && i < pv.size(); ++i) pt[i] = pv[i];
        r.singular_points.emplace_back(sp.at("level").get<int>(), pt);
    }
    for (auto& [k, v] : j.at("point_counts").items())
        r.point_counts[std::stoi(k)] = PointCounts{v.at("cover").get<unsigned long long>(),
                                                   v.at("quotient").get<unsigned long long>()};
    r.weil_ok = j.at("weil_ok").get<bool>();
    r.psi_ok = j.at("psi_ok").get<bool>();
    r.status = j.at("status").get<std::string>();
    r.accepted = j.at("accepted").get<bool>();
    return r;
}

// --- catalog entries (one JSON object per line)

struct CatalogEntry {
    QuadricSystem sys;
    VerificationReport report;
};

inline json entry_to_json(const CatalogEntry& e) {
    json j;
    j["field"] = field_to_json(*e.sys.field);
    j["params"] = params_to_json(e.sys);
    j["group"] = group_type_name(e.sys.type());
    json cm = json::array();
    for (auto& row : e.sys.coeffs) cm.push_back(std::vector<uint32_t>(row.begin(), row.end()));
    j["coeffs"] = std::move(cm);
    j["seed"] = e.sys.seed;
    j["report"] = report_to_json(e.report);
    j["status"] = e.report.status;
    return j;
}

inline CatalogEntry entry_from_json(const json& j) {
    const FiniteField& F = field_from_json(j.at("field"));
    auto parse_code = [&](const json& v) -> uint32_t {
        unsigned long long code = std::stoull(v.get<std::string>());
        if (code >= F.q()) throw std::runtime_error("parameter code out of range");
        return uint32_t(code);
    };
    uint32_t a = parse_code(j.at("params").at("a"));
    uint32_t b = parse_code(j.at("params").at("b"));
    auto cm = j.at("coeffs").get<std::vector<std::vector<uint32_t>>>();
    if (cm.size() != 3) throw std::runtime_error("coefficient matrix needs 3 rows");
    std::array<std::array<uint32_t, 12>, 3> coeffs{};
    for (int r = 0; r < 3; ++r) {
        if (cm[std::size_t(r)].size() != 12) throw std::runtime_error("coefficient row needs 12 entries");
        for (int c = 0; c < 12; ++c) coeffs[std::size_t(r)][std::size_t(c)] = cm[std::size_t(r)][std::size_t(c)];
    }
    CatalogEntry e{system_from_coeffs(F, a, b, coeffs,
                                      j.contains("seed") ? j.at("seed").get<uint64_t>() : 0),
                   {}};
    if (j.contains("report")) e.report = report_from_json(j.at("report"));
    else if (j.contains("status")) e.report.status = j.at("status").get<std::string>();
    return e;
}

inline void write_catalog(const std::string& path, const std::vector<CatalogEntry>& entries) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (auto& e : entries) out << entry_to_json(e).dump() << '\n';
}

inline std::vector<CatalogEntry> read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<CatalogEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        entries.push_back(entry_from_json(json::parse(line)));
    }
    return entries;
}

} // namespace enq
