// Command-line front end: invariant checks, lattice queries, candidate
// construction/verification, point counting, and seed-scan campaigns.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.  Outputs are
// JSON (JSON-lines for catalogs) except `campaign report`, which prints
// human-readable tables.  Every command is a pure function of its flags,
// input files, and seeds.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "enq/campaign.hpp"
#include "enq/lattice.hpp"

using namespace enq;

namespace {

constexpr int EXIT_VERIFY = 1;
constexpr int EXIT_USAGE = 2;

std::vector<long long> parse_ints(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (tok.find_first_not_of(" \t") != std::string::npos) out.push_back(std::stoll(tok));
    return out;
}

Vec10 parse_vec10(const std::string& s) {
    auto v = parse_ints(s);
    if (v.size() != 10) throw CLI::ValidationError("--vector", "needs 10 comma-separated integers");
    Vec10 x{};
    for (int i = 0; i < 10; ++i) x[std::size_t(i)] = v[std::size_t(i)];
    return x;
}

Pt6 parse_point(const std::string& s, const FiniteField& F) {
    auto v = parse_ints(s);
    if (v.size() != 6) throw CLI::ValidationError("--point", "needs 6 comma-separated codes");
    Pt6 p{};
    for (int i = 0; i < 6; ++i) {
        if (v[std::size_t(i)] < 0 || (unsigned long long)v[std::size_t(i)] >= F.q())
            throw CLI::ValidationError("--point", "coordinate code out of field range");
        p[std::size_t(i)] = uint32_t(v[std::size_t(i)]);
    }
    return p;
}

GroupType parse_group(const std::string& name) {
    return group_type_from_name(name); // throws on unknown tag
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// --- invariants check -------------------------------------------------------

int cmd_invariants_check(uint32_t chr, int k, const std::string& a_str, const std::string& b_str) {
    json out;
    bool all_ok = true;
    if (chr == 0) {
        auto gp = universal_params();
        auto basis = invariant_basis(gp);
        out["mode"] = "universal";
        out["relation"] = "a*b = 2";
        json qs = json::array();
        for (auto& q : basis) {
            bool ok = check_invariance(q, gp);
            all_ok = all_ok && ok;
            qs.push_back({{"quadric", q.to_string()}, {"invariant", ok}});
        }
        out["quadrics"] = std::move(qs);
    } else {
        const FiniteField& F = make_field(chr, k);
        unsigned long long a = std::stoull(a_str), b = std::stoull(b_str);
        if (a >= F.q() || b >= F.q()) throw CLI::ValidationError("--a/--b", "code out of field range");
        auto gp = field_params(F, uint32_t(a), uint32_t(b));
        auto basis = invariant_basis(gp);
        out["mode"] = "field";
        out["field"] = field_to_json(F);
        out["a"] = a_str;
        out["b"] = b_str;
        out["group"] = group_type_name(classify(gp));
        json qs = json::array();
        for (auto& q : basis) {
            bool ok = check_invariance(q, gp);
            all_ok = all_ok && ok;
            qs.push_back({{"quadric", q.to_string()}, {"invariant", ok}});
        }
        out["quadrics"] = std::move(qs);
    }
    out["all_invariant"] = all_ok;
    emit(out);
    return all_ok ? 0 : EXIT_VERIFY;
}

// --- construct / verify -----------------------------------------------------

int cmd_construct(uint32_t chr, int k, const std::string& group, uint64_t seed,
                  bool do_verify, const VerifyOptions& opts, const std::string& out_path) {
    const FiniteField& F = make_field(chr, k);
    auto [a, b] = canonical_params(F, parse_group(group));
    QuadricSystem sys = sample_system(F, a, b, seed);
    CatalogEntry e{sys, {}};
    if (do_verify) e.report = verify_candidate(sys, opts);
    else e.report.status = "unverified";
    json line = entry_to_json(e);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::app);
        if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
        f << line.dump() << '\n';
    }
    emit(line);
    return (!do_verify || e.report.accepted) ? 0 : EXIT_VERIFY;
}

int cmd_verify(const std::string& in_path, const std::string& out_path, const VerifyOptions& opts) {
    auto entries = read_catalog(in_path);
    bool all_ok = true;
    std::vector<CatalogEntry> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
        CatalogEntry r{e.sys, verify_candidate(e.sys, opts)};
        all_ok = all_ok && r.report.accepted;
        if (out_path.empty()) emit(entry_to_json(r));
        out.push_back(std::move(r));
    }
    if (!out_path.empty()) {
        write_catalog(out_path, out);
        json summary;
        summary["entries"] = out.size();
        summary["accepted"] = std::count_if(out.begin(), out.end(),
                                            [](const CatalogEntry& e) { return e.report.accepted; });
        summary["catalog"] = out_path;
        emit(summary);
    }
    return all_ok ? 0 : EXIT_VERIFY;
}

// --- quotient ----------------------------------------------------------------

int cmd_quotient(uint32_t chr, int k, const std::string& a_str, const std::string& b_str,
                 const std::string& point_str) {
    const FiniteField& F = make_field(chr, k);
    unsigned long long a = std::stoull(a_str), b = std::stoull(b_str);
    if (a >= F.q() || b >= F.q()) throw CLI::ValidationError("--a/--b", "code out of field range");
    field_params(F, uint32_t(a), uint32_t(b)); // validates ab = 2
    Pt6 pt = normalize_point(parse_point(point_str, F), F);

    auto quads = invariant_basis_quads(F, uint32_t(a), uint32_t(b));
    auto psi_at = [&](const Pt6& p) {
        Pt12 img{};
        bool nonzero = false;
        for (int i = 0; i < 12; ++i) {
            img[std::size_t(i)] = eval_quad(quads[std::size_t(i)], p, F);
            nonzero = nonzero || img[std::size_t(i)] != 0;
        }
        if (!nonzero) throw std::domain_error("all 12 invariants vanish at the point");
        uint32_t lead = 0;
        for (auto c : img)
            if (c != 0) { lead = c; break; }
        uint32_t inv = F.inv(lead);
        for (auto& c : img) c = F.mul(c, inv);
        return img;
    };

    uint32_t u = F.add(F.from_int(1), F.neg(F.mul(uint32_t(b), uint32_t(a))));
    Pt6 sp{};
    for (int i = 0; i < 3; ++i) {
        sp[std::size_t(i)] = pt[std::size_t(i)];
        sp[std::size_t(i) + 3] =
            F.add(F.mul(uint32_t(a), pt[std::size_t(i)]), F.mul(u, pt[std::size_t(i) + 3]));
    }
    sp = normalize_point(sp, F);

    Pt12 img = psi_at(pt), simg = psi_at(sp);
    json out;
    out["field"] = field_to_json(F);
    out["a"] = a_str;
    out["b"] = b_str;
    out["point"] = std::vector<uint32_t>(pt.begin(), pt.end());
    out["psi"] = std::vector<uint32_t>(img.begin(), img.end());
    out["sigma_point"] = std::vector<uint32_t>(sp.begin(), sp.end());
    out["psi_sigma"] = std::vector<uint32_t>(simg.begin(), simg.end());
    out["orbit_collapsed"] = img == simg;
    emit(out);
    return img == simg ? 0 : EXIT_VERIFY;
}

// --- count-points ------------------------------------------------------------

int cmd_count_points(const std::string& in_path, int tower, long long index, unsigned threads,
                     unsigned long long budget) {
    auto entries = read_catalog(in_path);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (index >= 0 && (long long)i != index) continue;
        auto& e = entries[i];
        int tmax = tower > 0 ? tower : count_window(*e.sys.field);
        for (int t = 1; t <= tmax; ++t) {
            PointCounts c = count_quotient_points(e.sys, t, threads, budget);
            json line;
            line["index"] = i;
            line["seed"] = e.sys.seed;
            line["group"] = group_type_name(e.sys.type());
            line["k"] = t;
            line["cover"] = c.cover;
            line["quotient"] = c.quotient;
            emit(line);
        }
    }
    return 0;
}

// --- lattice -----------------------------------------------------------------

int cmd_lattice_gram() {
    Gram10 G = gram_t237();
    json rows = json::array();
    for (auto& r : G) rows.push_back(std::vector<long long>(r.begin(), r.end()));
    auto sig = lattice_signature();
    json out;
    out["basis"] = "alpha_1..alpha_9 chain, alpha_0 attached to alpha_3";
    out["gram"] = std::move(rows);
    out["det"] = det_gram();
    out["signature"] = {sig.first, sig.second};
    emit(out);
    return 0;
}

int cmd_lattice_phi(const std::string& vec_str, int box, bool strict) {
    Vec10 x = parse_vec10(vec_str);
    PhiResult r = phi(x, box, strict);
    json out;
    out["vector"] = std::vector<long long>(x.begin(), x.end());
    out["norm"] = pairing(x, x);
    out["box"] = box;
    out["strict"] = strict;
    out["resolved"] = r.resolved;
    if (r.resolved) {
        out["value"] = r.value;
        out["box_used"] = r.box_used;
        out["witnesses"] = r.witnesses;
    }
    emit(out);
    return r.resolved ? 0 : EXIT_VERIFY;
}

int cmd_lattice_weight(int label) {
    Vec10 w = fundamental_weight(label);
    json out;
    out["label"] = label;
    out["weight"] = std::vector<long long>(w.begin(), w.end());
    out["norm"] = pairing(w, w);
    emit(out);
    return 0;
}

int cmd_lattice_reduce(const std::string& vec_str, const std::string& roots_path) {
    Vec10 x = parse_vec10(vec_str);
    std::vector<Vec10> roots;
    if (roots_path.empty()) {
        auto s = simple_roots();
        roots.assign(s.begin(), s.end());
    } else {
        std::ifstream f(roots_path);
        if (!f) throw std::runtime_error("cannot open " + roots_path);
        json j = json::parse(f);
        for (auto& row : j) {
            auto v = row.get<std::vector<long long>>();
            if (v.size() != 10) throw std::runtime_error("root rows need 10 entries");
            Vec10 r{};
            for (int i = 0; i < 10; ++i) r[std::size_t(i)] = v[std::size_t(i)];
            roots.push_back(r);
        }
    }
    ReduceResult r = chamber_reduce(x, roots);
    json out;
    out["input"] = std::vector<long long>(x.begin(), x.end());
    out["reduced"] = std::vector<long long>(r.vec.begin(), r.vec.end());
    out["word"] = r.word;
    out["dominant"] = is_ample_class(r.vec, roots);
    emit(out);
    return 0;
}

int cmd_lattice_count_check() {
    OrbitCount oc = orbit_count_check(); // throws if any cross-check fails
    json out;
    out["weyl_d9"] = oc.weyl_d9;
    out["numerator"] = oc.numerator;
    out["quotient"] = oc.quotient;
    emit(out);
    return 0;
}

// --- campaign ----------------------------------------------------------------

int cmd_campaign_run(uint32_t chr, int k, const std::string& groups_csv, uint64_t lo, uint64_t hi,
                     unsigned target, const VerifyOptions& opts, const std::string& out_path) {
    CampaignConfig cfg;
    cfg.p = chr;
    cfg.k = k;
    std::stringstream ss(groups_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) cfg.groups.push_back(parse_group(tok));
    cfg.seed_lo = lo;
    cfg.seed_hi = hi;
    cfg.target = target;
    cfg.opts = opts;
    CampaignResult res = run_campaign(cfg);
    if (!out_path.empty()) write_catalog(out_path, res.catalog);
    json out;
    out["field"] = field_to_json(make_field(chr, k));
    out["seed_lo"] = lo;
    out["seed_hi"] = hi;
    out["entries"] = res.catalog.size();
    out["groups"] = tallies_to_json(res.tallies);
    bool ok = true;
    for (auto& [gt, tally] : res.tallies) ok = ok && tally.accepted >= 1;
    out["ok"] = ok;
    if (!out_path.empty()) out["catalog"] = out_path;
    emit(out);
    return ok ? 0 : EXIT_VERIFY;
}

int cmd_campaign_report(const std::string& in_path) {
    auto entries = read_catalog(in_path);
    auto tallies = summarize_catalog(entries);
    std::printf("catalog: %s\n", in_path.c_str());
    std::printf("entries: %zu\n", entries.size());
    for (auto& [gt, tally] : tallies) {
        std::printf("\ngroup %s: attempted %llu, accepted %llu, rejected %llu\n", group_type_name(gt),
                    (unsigned long long)tally.attempted, (unsigned long long)tally.accepted,
                    (unsigned long long)(tally.attempted - tally.accepted));
        for (auto& [reason, n] : tally.rejections)
            std::printf("  rejected(%s): %llu\n", reason.c_str(), (unsigned long long)n);
    }
    for (auto& e : entries) {
        if (!e.report.accepted) continue;
        auto& F = *e.sys.field;
        std::printf("\naccepted %s seed %llu over F_%llu (a=%u, b=%u)\n",
                    group_type_name(e.sys.type()), (unsigned long long)e.sys.seed,
                    (unsigned long long)F.q(), e.sys.a_code, e.sys.b_code);
        std::printf("  graded dims d=0..6:");
        for (int d = 0; d <= 6; ++d) std::printf(" %d", e.report.hilbert_dims[std::size_t(d)]);
        std::printf("\n");
        unsigned long long qt = 1;
        for (auto& [t, c] : e.report.point_counts) {
            qt = 1;
            for (int i = 0; i < t; ++i) qt *= F.q();
            long long margin = (long long)c.quotient - 1 - (long long)(qt * qt);
            std::printf("  k=%d: cover %llu, quotient %llu, margin |%lld| <= %llu\n", t, c.cover,
                        c.quotient, margin, 10 * qt);
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact models of Enriques covers under the length-2 group schemes G_{a,b}"};
    app.require_subcommand(1);
    int rc = 0;
    auto run = [&rc](auto&& fn) { return [&rc, fn]() { rc = fn(); }; };

    // invariants
    auto* invariants = app.add_subcommand("invariants", "the 12 invariant quadrics");
    invariants->require_subcommand(1);
    {
        auto* chk = invariants->add_subcommand(
            "check", "verify invariance of the quadric basis (symbolic unless --char is given)");
        auto chr = std::make_shared<uint32_t>(0);
        auto k = std::make_shared<int>(1);
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto* oc = chk->add_option("--char", *chr, "field characteristic (omit for the universal ring)");
        chk->add_option("--k", *k, "extension degree")->default_val(1);
        auto* oa = chk->add_option("--a", *a, "parameter a (element code)");
        auto* ob = chk->add_option("--b", *b, "parameter b (element code)");
        oa->needs(oc);
        ob->needs(oc);
        oc->needs(oa)->needs(ob);
        chk->callback(run([chr, k, a, b]() { return cmd_invariants_check(*chr, *k, *a, *b); }));
    }

    // shared verification knobs
    auto add_verify_opts = [](CLI::App* cmd, std::shared_ptr<VerifyOptions> o) {
        cmd->add_option("--k-smooth", o->k_smooth, "smoothness scan up to this level")->default_val(3);
        cmd->add_option("--k-plane", o->k_plane, "plane avoidance up to this level")->default_val(4);
        cmd->add_option("--k-psi", o->k_psi, "quotient-map checks up to this level")->default_val(3);
        cmd->add_option("--threads", o->nthreads, "worker threads (0 = hardware)")->default_val(0);
        cmd->add_option("--budget", o->budget, "projective point budget")
            ->default_val(DEFAULT_POINT_BUDGET);
    };

    // construct
    {
        auto* c = app.add_subcommand("construct", "sample one candidate system from a seed");
        auto chr = std::make_shared<uint32_t>(2);
        auto k = std::make_shared<int>(1);
        auto group = std::make_shared<std::string>();
        auto seed = std::make_shared<uint64_t>(0);
        auto noverify = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        auto opts = std::make_shared<VerifyOptions>();
        c->add_option("--char", *chr, "field characteristic")->required();
        c->add_option("--k", *k, "extension degree")->default_val(1);
        c->add_option("--group", *group, "etale2|mu2|alpha2|ordinary")->required();
        c->add_option("--seed", *seed, "sampler seed")->required();
        c->add_flag("--no-verify", *noverify, "emit the sample without running verification");
        c->add_option("--out", *out, "append the catalog line to this file");
        add_verify_opts(c, opts);
        c->callback(run([=]() {
            return cmd_construct(*chr, *k, *group, *seed, !*noverify, *opts, *out);
        }));
    }

    // verify
    {
        auto* v = app.add_subcommand("verify", "re-verify every entry of a catalog");
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto opts = std::make_shared<VerifyOptions>();
        v->add_option("--in", *in, "input catalog (JSON lines)")->required();
        v->add_option("--out", *out, "write the refreshed catalog here (default: stdout)");
        add_verify_opts(v, opts);
        v->callback(run([=]() { return cmd_verify(*in, *out, *opts); }));
    }

    // quotient
    {
        auto* q = app.add_subcommand("quotient", "apply the 12-invariant quotient map to a point");
        auto chr = std::make_shared<uint32_t>(2);
        auto k = std::make_shared<int>(1);
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto pt = std::make_shared<std::string>();
        q->add_option("--char", *chr, "field characteristic")->required();
        q->add_option("--k", *k, "extension degree")->default_val(1);
        q->add_option("--a", *a, "parameter a (element code)")->required();
        q->add_option("--b", *b, "parameter b (element code)")->required();
        q->add_option("--point", *pt, "6 comma-separated coordinate codes")->required();
        q->callback(run([=]() { return cmd_quotient(*chr, *k, *a, *b, *pt); }));
    }

    // count-points
    {
        auto* cp = app.add_subcommand("count-points", "cover/quotient point counts for catalog entries");
        auto in = std::make_shared<std::string>();
        auto tower = std::make_shared<int>(0);
        auto index = std::make_shared<long long>(-1);
        auto threads = std::make_shared<unsigned>(0);
        auto budget = std::make_shared<unsigned long long>(DEFAULT_POINT_BUDGET);
        cp->add_option("--in", *in, "input catalog (JSON lines)")->required();
        cp->add_option("--tower", *tower, "count up to this level (default: q^k <= 16 window)")
            ->default_val(0);
        cp->add_option("--index", *index, "only this catalog line (0-based; default all)")
            ->default_val(-1);
        cp->add_option("--threads", *threads, "worker threads (0 = hardware)")->default_val(0);
        cp->add_option("--budget", *budget, "projective point budget")->default_val(DEFAULT_POINT_BUDGET);
        cp->callback(run([=]() { return cmd_count_points(*in, *tower, *index, *threads, *budget); }));
    }

    // lattice
    auto* lat = app.add_subcommand("lattice", "rank-10 hyperbolic lattice queries");
    lat->require_subcommand(1);
    {
        auto* g = lat->add_subcommand("gram", "Gram matrix, determinant, signature");
        g->callback(run([]() { return cmd_lattice_gram(); }));

        auto* ph = lat->add_subcommand("phi", "minimum pairing against isotropic classes");
        auto vec = std::make_shared<std::string>();
        auto box = std::make_shared<int>(3);
        auto strict = std::make_shared<bool>(false);
        ph->add_option("--vector", *vec, "10 comma-separated coordinates")->required();
        ph->add_option("--box", *box, "coordinate box for the isotropic search")->default_val(3);
        ph->add_flag("--strict", *strict, "no box escalation: unresolved if the box is empty");
        ph->callback(run([=]() { return cmd_lattice_phi(*vec, *box, *strict); }));

        auto* w = lat->add_subcommand("weight", "fundamental weight for a basis vertex");
        auto label = std::make_shared<int>(1);
        w->add_option("--i", *label, "vertex label (0..9)")->default_val(1);
        w->callback(run([=]() { return cmd_lattice_weight(*label); }));

        auto* rd = lat->add_subcommand("reduce", "reflect into the fundamental chamber");
        auto vec2 = std::make_shared<std::string>();
        auto roots = std::make_shared<std::string>();
        rd->add_option("--vector", *vec2, "10 comma-separated coordinates")->required();
        rd->add_option("--roots", *roots, "JSON file with root rows (default: simple roots)");
        rd->callback(run([=]() { return cmd_lattice_reduce(*vec2, *roots); }));

        auto* cc = lat->add_subcommand("count-check", "orbit-count arithmetic cross-check");
        cc->callback(run([]() { return cmd_lattice_count_check(); }));
    }

    // campaign
    auto* camp = app.add_subcommand("campaign", "seed-scan construction campaigns");
    camp->require_subcommand(1);
    {
        auto* cr = camp->add_subcommand("run", "scan a seed range and write a catalog");
        auto chr = std::make_shared<uint32_t>(2);
        auto k = std::make_shared<int>(1);
        auto groups = std::make_shared<std::string>();
        auto lo = std::make_shared<uint64_t>(0);
        auto hi = std::make_shared<uint64_t>(200);
        auto target = std::make_shared<unsigned>(1);
        auto out = std::make_shared<std::string>();
        auto opts = std::make_shared<VerifyOptions>();
        cr->add_option("--char", *chr, "field characteristic")->required();
        cr->add_option("--k", *k, "extension degree")->default_val(1);
        cr->add_option("--groups", *groups, "comma-separated group tags")->required();
        cr->add_option("--seed-lo", *lo, "first seed")->default_val(0);
        cr->add_option("--seed-hi", *hi, "end seed (exclusive)")->default_val(200);
        cr->add_option("--target", *target, "stop a group after this many acceptances (0 = scan all)")
            ->default_val(1);
        cr->add_option("--out", *out, "catalog output path (JSON lines)");
        add_verify_opts(cr, opts);
        cr->callback(run([=]() {
            return cmd_campaign_run(*chr, *k, *groups, *lo, *hi, *target, *opts, *out);
        }));

        auto* rp = camp->add_subcommand("report", "human-readable summary of a catalog");
        auto in = std::make_shared<std::string>();
        rp->add_option("--in", *in, "input catalog (JSON lines)")->required();
        rp->callback(run([=]() { return cmd_campaign_report(*in); }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return EXIT_USAGE;
    }
    return rc;
}
