#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "fano/registry.hpp"

namespace fano::registry {

using nlohmann::ordered_json;

std::string display_group_name(const std::string& tag) {
    if (tag == "trivial" || tag == "0") return "0";
    if (tag == "Z2") return "Z/2";
    if (tag == "Z3") return "Z/3";
    if (tag == "Z2xZ2") return "(Z/2)^2";
    if (tag == "Z2xS3") return "Z/2 x S3";
    if (tag == "Z4") return "Z/4";
    if (tag == "Z6") return "Z/6";
    return tag;  // S3, S4, Dic3, A4, W(E6), S5, "-", ...
}

namespace {

const VerificationReport* find_report(const std::vector<VerificationReport>& reports,
                                      const std::string& id) {
    for (const auto& r : reports)
        if (r.id == id) return &r;
    return nullptr;
}

std::string pad(const std::string& s, size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::NotApplicable: return "N/A";
    }
    return "?";
}

}  // namespace

std::string render_table(const std::vector<FamilyRecord>& records,
                         const std::vector<VerificationReport>& reports, TableKind kind) {
    std::ostringstream os;
    auto sorted = records;
    std::sort(sorted.begin(), sorted.end(), [](const FamilyRecord& a, const FamilyRecord& b) {
        auto key = [](const FamilyRecord& r) {
            auto dot = r.id.find('.');
            return std::pair<int, int>(std::stoi(r.id.substr(0, dot)),
                                       std::stoi(r.id.substr(dot + 1)));
        };
        return key(a) < key(b);
    });

    if (kind == TableKind::Summary) {
        os << pad("family", 8) << pad("AutP(X)", 12) << pad("WG_X", 12) << "verdict\n";
        os << std::string(40, '-') << "\n";
        for (const auto& rec : sorted) {
            const auto* rep = find_report(reports, rec.id);
            std::string autp = rep ? rep->computed_autp
                                   : (rec.expected_autp == "UNKNOWN"
                                          ? "?"
                                          : display_group_name(rec.expected_autp));
            std::string wg = display_group_name(rec.expected_wg);
            if (rec.expected_wg_order)
                wg += " (" + std::to_string(*rec.expected_wg_order) + ")";
            os << pad(rec.id, 8) << pad(autp, 12) << pad(wg, 12)
               << (rep ? rep->overall : "-") << "\n";
        }
        return os.str();
    }

    if (kind == TableKind::Weyl) {
        os << pad("family", 8) << pad("cone-symmetry check", 42) << "status\n";
        os << std::string(60, '-') << "\n";
        for (const auto& rec : sorted) {
            const auto* rep = find_report(reports, rec.id);
            if (!rep) continue;
            auto it = rep->checks.find("containment_in_cone_symmetry");
            if (it == rep->checks.end() || it->second.status == CheckStatus::NotApplicable)
                continue;
            os << pad(rec.id, 8) << pad(it->second.detail.substr(0, 40), 42)
               << status_str(it->second.status) << "\n";
        }
        return os.str();
    }

    os << pad("family", 8) << pad("H1 over all subgroups", 52) << "status\n";
    os << std::string(66, '-') << "\n";
    for (const auto& rec : sorted) {
        const auto* rep = find_report(reports, rec.id);
        if (!rep) continue;
        auto it = rep->checks.find("h1_all_subgroups");
        if (it == rep->checks.end() || it->second.status == CheckStatus::NotApplicable) continue;
        os << pad(rec.id, 8) << pad(it->second.detail.substr(0, 50), 52)
           << status_str(it->second.status) << "\n";
    }
    return os.str();
}

std::string reports_to_json(const std::vector<FamilyRecord>& records,
                            const std::vector<VerificationReport>& reports,
                            const VerifyConfig& cfg) {
    ordered_json doc;
    doc["schema"] = "fano-verification-report/1";
    doc["config"] = {{"prime_pool", cfg.prime_pool},
                     {"primes_per_family", cfg.primes_per_family},
                     {"chart_budget_ms", cfg.chart_budget.count()},
                     {"jobs", cfg.jobs},
                     {"seed", cfg.seed}};
    ordered_json fams = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json f;
        f["id"] = rep.id;
        const FamilyRecord* rec = nullptr;
        for (const auto& r : records)
            if (r.id == rep.id) rec = &r;
        if (rec) {
            f["expected_autp"] = rec->expected_autp;
            f["expected_wg"] = rec->expected_wg;
        }
        f["computed_autp"] = rep.computed_autp;
        f["overall"] = rep.overall;
        ordered_json checks;
        for (const auto& [k, v] : rep.checks) {
            checks[k] = {{"status", status_str(v.status)}, {"detail", v.detail}};
        }
        f["checks"] = checks;
        f["primes_used"] = rep.primes_used;
        f["work_gb_pairs"] = rep.work_gb_pairs;
        f["wall_ms"] = rep.wall_ms;  // excluded from byte-determinism comparisons
        fams.push_back(std::move(f));
    }
    doc["families"] = std::move(fams);
    return doc.dump(1);
}

std::vector<VerificationReport> reports_from_json(const std::string& json_text) {
    auto doc = nlohmann::json::parse(json_text);
    std::vector<VerificationReport> out;
    for (const auto& f : doc.at("families")) {
        VerificationReport rep;
        rep.id = f.at("id").get<std::string>();
        rep.computed_autp = f.at("computed_autp").get<std::string>();
        rep.overall = f.at("overall").get<std::string>();
        for (auto it = f.at("checks").begin(); it != f.at("checks").end(); ++it) {
            CheckResult res;
            std::string st = it.value().at("status").get<std::string>();
            res.status = st == "PASS" ? CheckStatus::Pass
                                      : st == "FAIL" ? CheckStatus::Fail
                                                     : CheckStatus::NotApplicable;
            res.detail = it.value().at("detail").get<std::string>();
            rep.checks[it.key()] = res;
        }
        if (f.contains("primes_used"))
            rep.primes_used = f.at("primes_used").get<std::vector<uint64_t>>();
        if (f.contains("work_gb_pairs")) rep.work_gb_pairs = f.at("work_gb_pairs").get<uint64_t>();
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace fano::registry
