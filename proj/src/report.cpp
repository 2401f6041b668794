#include "batchcodes/report.hpp"

#include <sstream>

#include "batchcodes/errors.hpp"

namespace batchcodes {

using nlohmann::json;

namespace {

json optional_number(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::size_t> optional_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::size_t>();
}

SizeCap cap_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "inf") throw InvalidArgument("cap must be \"inf\" or a positive integer");
        return SizeCap::unbounded();
    }
    return SizeCap::at_most(j.get<std::size_t>());
}

BoundKind kind_from_string(const std::string& s) {
    if (s == "lower_bound_on_n") return BoundKind::lower_bound_on_n;
    if (s == "cardinality_cap") return BoundKind::cardinality_cap;
    throw InvalidArgument("unknown bound kind '" + s + "'");
}

std::string optional_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "inf"; }

std::string join_one_based(const std::vector<std::size_t>& columns) {
    std::string s;
    for (const std::size_t c : columns) {
        if (!s.empty()) s += ',';
        s += std::to_string(c + 1);
    }
    return s;
}

template <typename T>
std::string join(const std::vector<T>& values) {
    std::string s;
    for (const auto& v : values) {
        if (!s.empty()) s += ' ';
        if constexpr (std::is_same_v<T, std::optional<std::size_t>>) {
            s += v ? std::to_string(*v) : "-";
        } else {
            s += std::to_string(v);
        }
    }
    return s;
}

}  // namespace

AnalysisReport analyze(const LinearCode& code, std::string source, std::span<const SizeCap> caps,
                       std::span<const Query> queries) {
    AnalysisReport report;
    report.source = std::move(source);
    report.profile = profile_code(code, caps);
    report.bounds = evaluate_all(report.profile);
    for (const Query& q : queries) {
        for (const SizeCap cap : caps) {
            report.plans.push_back(PlanRecord{q, cap, serve_query(code, q, cap)});
        }
    }
    return report;
}

json to_json(const SizeCap& cap) { return cap.bounded() ? json(cap.value()) : json("inf"); }

json to_json(const CodeProfile& p) {
    json caps = json::array();
    for (const CapProfile& c : p.caps) {
        json packing = json::array();
        for (const auto& v : c.all_symbol_packing) packing.push_back(optional_number(v));
        caps.push_back({{"cap", to_json(c.cap)},
                        {"batch_t", c.batch_t},
                        {"pir_t", c.pir_t},
                        {"all_symbol_availability", c.all_symbol_availability},
                        {"all_symbol_packing", packing},
                        {"info_symbol_availability", optional_number(c.info_symbol_availability)},
                        {"info_symbol_packing", c.info_symbol_packing}});
    }
    json min_sizes = json::array();
    for (const auto& v : p.all_symbol_min_size) min_sizes.push_back(optional_number(v));
    return {{"n", p.n},
            {"k", p.k},
            {"d", p.d},
            {"rate", {{"numerator", p.rate.numerator}, {"denominator", p.rate.denominator}}},
            {"systematic", p.systematic},
            {"all_symbol_locality", optional_number(p.all_symbol_locality)},
            {"all_symbol_min_size", min_sizes},
            {"caps", caps}};
}

json to_json(const BoundVerdict& v) {
    json j = {{"name", v.name},
              {"kind", to_string(v.kind)},
              {"applicable", v.applicable},
              {"reason", v.reason},
              {"rhs", v.rhs},
              {"satisfied", v.satisfied},
              {"attained", v.attained},
              {"parameters", v.parameters}};
    if (v.cap) j["cap"] = to_json(*v.cap);
    return j;
}

json to_json(const PlanRecord& record) {
    json query = json::array();
    for (const std::size_t i : record.query.indices()) query.push_back(i + 1);
    json sets = json::array();
    if (record.plan) {
        for (const Assignment& a : record.plan->assignments) {
            json cols = json::array();
            for (const std::size_t c : a.set.columns) cols.push_back(c + 1);
            sets.push_back(cols);
        }
    }
    return {{"query", query}, {"cap", to_json(record.cap)}, {"servable", record.plan.has_value()}, {"sets", sets}};
}

json to_json(const AnalysisReport& report) {
    json bounds = json::array();
    for (const BoundVerdict& v : report.bounds) bounds.push_back(to_json(v));
    json plans = json::array();
    for (const PlanRecord& p : report.plans) plans.push_back(to_json(p));
    return {{"code", {{"k", report.profile.k}, {"n", report.profile.n}, {"source", report.source}}},
            {"profile", to_json(report.profile)},
            {"bounds", bounds},
            {"plans", plans}};
}

json to_json(const SearchResult& r) {
    json j = {{"k", r.k},
              {"t", r.t},
              {"mode", to_string(r.mode)},
              {"r_cap", to_json(r.r_cap)},
              {"n_max", r.n_max},
              {"found", r.optimal_n.has_value()},
              {"optimal_n", optional_number(r.optimal_n)},
              {"redundancy", optional_number(r.redundancy())},
              {"nodes_explored", r.nodes_explored},
              {"rejected_per_length", r.rejected_per_length}};
    if (r.witness) {
        json rows = json::array();
        for (std::size_t i = 0; i < r.witness->k(); ++i) rows.push_back(r.witness->generator().row(i).to_string());
        j["witness"] = rows;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport report;
    report.source = j.at("code").at("source").get<std::string>();

    const json& p = j.at("profile");
    CodeProfile& profile = report.profile;
    profile.n = p.at("n").get<std::size_t>();
    profile.k = p.at("k").get<std::size_t>();
    profile.d = p.at("d").get<std::size_t>();
    profile.rate = Rate{p.at("rate").at("numerator").get<std::size_t>(),
                        p.at("rate").at("denominator").get<std::size_t>()};
    profile.systematic = p.at("systematic").get<bool>();
    profile.all_symbol_locality = optional_from(p.at("all_symbol_locality"));
    for (const json& v : p.at("all_symbol_min_size")) profile.all_symbol_min_size.push_back(optional_from(v));
    for (const json& c : p.at("caps")) {
        CapProfile entry;
        entry.cap = cap_from_json(c.at("cap"));
        entry.batch_t = c.at("batch_t").get<std::size_t>();
        entry.pir_t = c.at("pir_t").get<std::size_t>();
        entry.all_symbol_availability = c.at("all_symbol_availability").get<std::size_t>();
        for (const json& v : c.at("all_symbol_packing")) entry.all_symbol_packing.push_back(optional_from(v));
        entry.info_symbol_availability = optional_from(c.at("info_symbol_availability"));
        entry.info_symbol_packing = c.at("info_symbol_packing").get<std::vector<std::size_t>>();
        profile.caps.push_back(std::move(entry));
    }

    for (const json& b : j.at("bounds")) {
        BoundVerdict v;
        v.name = b.at("name").get<std::string>();
        v.kind = kind_from_string(b.at("kind").get<std::string>());
        v.applicable = b.at("applicable").get<bool>();
        v.reason = b.at("reason").get<std::string>();
        v.rhs = b.at("rhs").get<std::int64_t>();
        v.satisfied = b.at("satisfied").get<bool>();
        v.attained = b.at("attained").get<bool>();
        v.parameters = b.at("parameters").get<std::map<std::string, std::int64_t>>();
        if (b.contains("cap")) v.cap = cap_from_json(b.at("cap"));
        report.bounds.push_back(std::move(v));
    }

    for (const json& entry : j.at("plans")) {
        std::vector<std::size_t> indices;
        for (const json& i : entry.at("query")) indices.push_back(i.get<std::size_t>() - 1);
        PlanRecord record{Query(indices, profile.k), cap_from_json(entry.at("cap")), std::nullopt};
        if (entry.at("servable").get<bool>()) {
            ServingPlan plan;
            std::size_t position = 0;
            for (const json& set : entry.at("sets")) {
                RecoverySet rs{BitVector::unit(profile.k, record.query.indices().at(position)), {},
                               BitVector(profile.n)};
                for (const json& c : set) {
                    const std::size_t col = c.get<std::size_t>() - 1;
                    rs.columns.push_back(col);
                    rs.mask.set(col);
                }
                plan.assignments.push_back(Assignment{position++, std::move(rs)});
            }
            record.plan = std::move(plan);
        }
        report.plans.push_back(std::move(record));
    }
    return report;
}

std::string render_plan(const ServingPlan& plan) {
    std::string s;
    for (const Assignment& a : plan.assignments) {
        if (!s.empty()) s += "; ";
        s += "T" + std::to_string(a.position + 1) + "={" + join_one_based(a.set.columns) + "}";
    }
    return s;
}

std::string render_text(const std::vector<BoundVerdict>& bounds) {
    std::ostringstream out;
    out << "bound           cap  kind              rhs    status\n";
    for (const BoundVerdict& v : bounds) {
        std::string name = v.name;
        name.resize(std::max<std::size_t>(name.size(), 15), ' ');
        std::string cap = v.cap ? v.cap->to_string() : "-";
        cap.resize(std::max<std::size_t>(cap.size(), 4), ' ');
        std::string kind = v.kind == BoundKind::lower_bound_on_n ? "n >=" : "q^k <=";
        kind.resize(17, ' ');
        out << name << ' ' << cap << ' ' << kind << ' ';
        if (!v.applicable) {
            out << "-      not applicable (" << v.reason << ")\n";
            continue;
        }
        std::string rhs = std::to_string(v.rhs);
        rhs.resize(std::max<std::size_t>(rhs.size(), 6), ' ');
        out << rhs << ' ' << (v.attained ? "attained" : v.satisfied ? "holds" : "VIOLATED");
        std::string witness;
        for (const char* key : {"beta", "epsilon", "lambda", "delta"}) {
            if (const auto it = v.parameters.find(key); it != v.parameters.end()) {
                witness += std::string(witness.empty() ? "" : ", ") + key + "=" + std::to_string(it->second);
            }
        }
        if (!witness.empty()) out << " (" << witness << ")";
        out << '\n';
    }
    return out.str();
}

std::string render_text(const AnalysisReport& report) {
    const CodeProfile& p = report.profile;
    std::ostringstream out;
    out << "code: " << report.source << "\n";
    out << "[n, k, d] = [" << p.n << ", " << p.k << ", " << p.d << "], rate " << p.rate.numerator << "/"
        << p.rate.denominator << ", " << (p.systematic ? "systematic" : "not systematic") << "\n";
    out << "all-symbol locality: " << optional_text(p.all_symbol_locality) << "\n";
    out << "per-symbol min recovery size: " << join(p.all_symbol_min_size) << "\n\n";
    out << "cap  batch_t  pir_t  availability  info_availability\n";
    for (const CapProfile& c : p.caps) {
        std::string cap = c.cap.to_string();
        cap.resize(4, ' ');
        std::string bt = std::to_string(c.batch_t);
        bt.resize(8, ' ');
        std::string pt = std::to_string(c.pir_t);
        pt.resize(6, ' ');
        std::string av = std::to_string(c.all_symbol_availability);
        av.resize(13, ' ');
        out << cap << ' ' << bt << ' ' << pt << ' ' << av << ' '
            << (c.info_symbol_availability ? std::to_string(*c.info_symbol_availability) : "-") << "\n";
    }
    out << "\n" << render_text(report.bounds);
    if (!report.plans.empty()) out << "\n";
    for (const PlanRecord& r : report.plans) {
        out << "query " << r.query.to_string() << " (cap " << r.cap.to_string()
            << "): " << (r.plan ? render_plan(*r.plan) : "UNSERVABLE") << "\n";
    }
    return out.str();
}

std::string render_text(const SearchResult& r) {
    std::ostringstream out;
    out << (r.mode == SearchMode::batch ? "B" : "P") << "(" << r.k << ", " << r.t << ")";
    if (r.r_cap.bounded()) out << " with cap r=" << r.r_cap.value();
    if (r.optimal_n) {
        out << " = " << *r.optimal_n << " (redundancy " << *r.redundancy() << ")\n";
        out << "witness:\n";
        for (std::size_t i = 0; i < r.witness->k(); ++i) out << r.witness->generator().row(i).to_string() << "\n";
    } else {
        out << ": not found for n <= " << r.n_max << "\n";
    }
    out << "candidates examined: " << r.nodes_explored;
    if (!r.rejected_per_length.empty()) {
        out << " (rejected per length from n=" << r.k << ": " << join(r.rejected_per_length) << ")";
    }
    out << "\n";
    return out.str();
}

}  // namespace batchcodes
