#pragma once

// Seed-scan campaigns: sample candidate systems over a fixed field and group
// parameter choice, verify each, and collect a catalog plus per-group
// summary.  Scans are deterministic in the seed range, so a campaign result
// is reproducible from (field, group, seed range, target) alone.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "enq/json_io.hpp"

namespace enq {

// Canonical group parameters over F: the smallest-code (a, b) with ab = 2
// realizing the requested type.
inline std::pair<uint32_t, uint32_t> canonical_params(const FiniteField& F, GroupType gt) {
    switch (gt) {
    case GroupType::Etale2:
        if (F.p() != 2) throw std::invalid_argument("etale2 needs characteristic 2");
        return {1, 0};
    case GroupType::Mu2:
        if (F.p() != 2) throw std::invalid_argument("mu2 needs characteristic 2");
        return {0, 1};
    case GroupType::Alpha2:
        if (F.p() != 2) throw std::invalid_argument("alpha2 needs characteristic 2");
        return {0, 0};
    case GroupType::MixedOrdinary:
        if (F.p() == 2) throw std::invalid_argument("ordinary type needs odd characteristic");
        return {1, F.from_int(2)};
    }
    throw std::invalid_argument("unknown group type");
}

struct CampaignConfig {
    uint32_t p = 2;
    int k = 1;
    std::vector<GroupType> groups;
    uint64_t seed_lo = 0;
    uint64_t seed_hi = 200;   // exclusive
    unsigned target = 1;      // accepted candidates per group; 0 = scan all seeds
    VerifyOptions opts;
};

struct GroupTally {
    uint64_t attempted = 0;
    uint64_t accepted = 0;
    std::map<std::string, uint64_t> rejections; // reason -> count
};

struct CampaignResult {
    std::vector<CatalogEntry> catalog;
    std::map<GroupType, GroupTally> tallies;

    bool all_targets_met(unsigned target) const {
        if (target == 0) return true;
        for (auto& [gt, tally] : tallies)
            if (tally.accepted < target) return false;
        return !tallies.empty();
    }
};

inline std::string rejection_reason(const std::string& status) {
    auto l = status.find('(');
    auto r = status.rfind(')');
    if (l == std::string::npos || r == std::string::npos || r < l) return status;
    return status.substr(l + 1, r - l - 1);
}

template <class Progress>
CampaignResult run_campaign(const CampaignConfig& cfg, Progress&& progress) {
    if (cfg.groups.empty()) throw std::invalid_argument("campaign needs at least one group type");
    if (cfg.seed_hi <= cfg.seed_lo) throw std::invalid_argument("empty seed range");
    const FiniteField& F = make_field(cfg.p, cfg.k);
    CampaignResult res;
    for (GroupType gt : cfg.groups) {
        auto [a, b] = canonical_params(F, gt);
        GroupTally& tally = res.tallies[gt];
        for (uint64_t seed = cfg.seed_lo; seed < cfg.seed_hi; ++seed) {
            QuadricSystem sys = sample_system(F, a, b, seed);
            VerificationReport rep = verify_candidate(sys, cfg.opts);
            ++tally.attempted;
            if (rep.accepted) ++tally.accepted;
            else ++tally.rejections[rejection_reason(rep.status)];
            progress(gt, seed, rep);
            res.catalog.push_back(CatalogEntry{std::move(sys), std::move(rep)});
            if (cfg.target != 0 && tally.accepted >= cfg.target) break;
        }
    }
    return res;
}

inline CampaignResult run_campaign(const CampaignConfig& cfg) {
    return run_campaign(cfg, [](GroupType, uint64_t, const VerificationReport&) {});
}

// Per-group roll-up of an existing catalog (entries keep their scan order).
inline std::map<GroupType, GroupTally> summarize_catalog(const std::vector<CatalogEntry>& entries) {
    std::map<GroupType, GroupTally> tallies;
    for (auto& e : entries) {
        GroupTally& tally = tallies[e.sys.type()];
        ++tally.attempted;
        if (e.report.accepted) ++tally.accepted;
        else ++tally.rejections[rejection_reason(e.report.status)];
    }
    return tallies;
}

inline json tallies_to_json(const std::map<GroupType, GroupTally>& tallies) {
    json j = json::object();
    for (auto& [gt, tally] : tallies) {
        json g;
        g["attempted"] = tally.attempted;
        g["accepted"] = tally.accepted;
        json rej = json::object();
        uint64_t rejected = 0;
        for (auto& [reason, n] : tally.rejections) { rej[reason] = n; rejected += n; }
        g["rejected"] = rejected;
        g["rejections"] = std::move(rej);
        j[group_type_name(gt)] = std::move(g);
    }
    return j;
}

} // namespace enq
