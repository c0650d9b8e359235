#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symchar/asymptotics.hpp"
#include "symchar/characters.hpp"
#include "symchar/classify.hpp"
#include "symchar/errors.hpp"
#include "symchar/partition.hpp"
#include "symchar/sampler.hpp"

namespace symchar::io {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

/// Big counts travel as decimal strings; they outgrow 64-bit JSON numbers.
inline std::string big_to_string(const BigInt& v) { return v.get_str(); }

inline BigInt big_from_string(const std::string& s) {
    if (s.empty()) throw io_error("empty big integer field");
    return BigInt(s);
}

/// num/den as a fixed-point decimal string with `digits` places, rounded to
/// nearest. Exact integer arithmetic, so identical on every platform.
inline std::string proportion_decimal(const BigInt& num, const BigInt& den, int digits = 12) {
    if (den == 0) throw std::invalid_argument("proportion_decimal: zero denominator");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt r = (num * scale * 2 + den) / (den * 2);
    BigInt ipart = r / scale;
    BigInt frac = r % scale;
    std::string f = frac.get_str();
    f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
    return ipart.get_str() + "." + f;
}

inline Partition partition_from_label(const std::string& label) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < label.size()) {
        std::size_t comma = label.find(',', pos);
        if (comma == std::string::npos) comma = label.size();
        parts.push_back(std::stoi(label.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------- census --

inline json census_to_json(const ZeroCensus& c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = c.n;
    j["total_pairs"] = big_to_string(c.total_pairs);
    if (c.z_total)
        j["z_total"] = big_to_string(*c.z_total);
    else
        j["z_total"] = nullptr;
    j["z1"] = big_to_string(c.z1);
    j["z2"] = big_to_string(c.z2);
    j["z3"] = big_to_string(c.z3);
    j["z_poly"] = big_to_string(c.z_poly);
    static const char* names[5] = {"i", "ii", "iii", "iv", "v"};
    json cond;
    for (int k = 0; k < 5; ++k) cond[names[k]] = big_to_string(c.conditions.satisfying[static_cast<std::size_t>(k)]);
    cond["union"] = big_to_string(c.conditions.all);
    json first;
    for (int k = 0; k < 5; ++k) first[names[k]] = big_to_string(c.conditions.first_match[static_cast<std::size_t>(k)]);
    cond["first_match"] = first;
    cond["convention"] = "clamped thresholds";
    cond["t1_clamped"] = c.t1_clamped;
    cond["t2_clamped"] = c.t2_clamped;
    j["conditions"] = cond;
    json props;
    props["z1"] = proportion_decimal(c.z1, c.total_pairs);
    props["z2"] = proportion_decimal(c.z2, c.total_pairs);
    props["z3"] = proportion_decimal(c.z3, c.total_pairs);
    props["z_poly"] = proportion_decimal(c.z_poly, c.total_pairs);
    if (c.z_total) props["z_total"] = proportion_decimal(*c.z_total, c.total_pairs);
    j["proportions"] = props;
    return j;
}

inline std::string census_json_string(const ZeroCensus& c) { return census_to_json(c).dump(2) + "\n"; }

inline ZeroCensus census_from_json(const std::string& text) {
    json j = json::parse(text);
    ZeroCensus c;
    c.n = j.at("n").get<int>();
    c.total_pairs = big_from_string(j.at("total_pairs").get<std::string>());
    if (!j.at("z_total").is_null()) c.z_total = big_from_string(j.at("z_total").get<std::string>());
    c.z1 = big_from_string(j.at("z1").get<std::string>());
    c.z2 = big_from_string(j.at("z2").get<std::string>());
    c.z3 = big_from_string(j.at("z3").get<std::string>());
    c.z_poly = big_from_string(j.at("z_poly").get<std::string>());
    static const char* names[5] = {"i", "ii", "iii", "iv", "v"};
    const json& cond = j.at("conditions");
    for (int k = 0; k < 5; ++k) {
        c.conditions.satisfying[static_cast<std::size_t>(k)] =
            big_from_string(cond.at(names[k]).get<std::string>());
        c.conditions.first_match[static_cast<std::size_t>(k)] =
            big_from_string(cond.at("first_match").at(names[k]).get<std::string>());
    }
    c.conditions.all = big_from_string(cond.at("union").get<std::string>());
    c.t1_clamped = cond.at("t1_clamped").get<double>();
    c.t2_clamped = cond.at("t2_clamped").get<double>();
    return c;
}

inline std::string census_csv_header() {
    return "n,total_pairs,z_total,z1,z2,z3,z_poly,cond_i,cond_ii,cond_iii,cond_iv,cond_v,"
           "cond_union,prop_z1,prop_z2,prop_z3,prop_z_poly,prop_z_total";
}

inline std::string census_csv_row(const ZeroCensus& c) {
    std::ostringstream out;
    out << c.n << ',' << big_to_string(c.total_pairs) << ','
        << (c.z_total ? big_to_string(*c.z_total) : "") << ',' << big_to_string(c.z1) << ','
        << big_to_string(c.z2) << ',' << big_to_string(c.z3) << ',' << big_to_string(c.z_poly);
    for (int k = 0; k < 5; ++k) out << ',' << big_to_string(c.conditions.satisfying[static_cast<std::size_t>(k)]);
    out << ',' << big_to_string(c.conditions.all);
    out << ',' << proportion_decimal(c.z1, c.total_pairs) << ',' << proportion_decimal(c.z2, c.total_pairs)
        << ',' << proportion_decimal(c.z3, c.total_pairs) << ','
        << proportion_decimal(c.z_poly, c.total_pairs) << ','
        << (c.z_total ? proportion_decimal(*c.z_total, c.total_pairs) : "");
    return out.str();
}

inline std::string census_csv(const std::vector<ZeroCensus>& rows) {
    std::string out = "# schema_version=" + std::to_string(kSchemaVersion) + "\n";
    out += census_csv_header();
    out += '\n';
    for (const auto& row : rows) {
        out += census_csv_row(row);
        out += '\n';
    }
    return out;
}

// ----------------------------------------------------------------- table --

inline std::string table_to_csv(const CharTable& table) {
    std::ostringstream out;
    out << "# schema_version=" << kSchemaVersion << "\n";
    out << "\"lambda\\mu\"";
    for (const auto& mu : table.order) out << ",\"" << mu.label() << "\"";
    out << "\n";
    for (std::size_t i = 0; i < table.order.size(); ++i) {
        out << "\"" << table.order[i].label() << "\"";
        for (std::size_t j = 0; j < table.order.size(); ++j)
            out << "," << table.values[i][j].get_str();
        out << "\n";
    }
    return out.str();
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (quoted) {
            if (ch == '"')
                quoted = false;
            else
                cur += ch;
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    cells.push_back(cur);
    return cells;
}

}  // namespace detail

inline CharTable table_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CharTable table;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto cells = detail::split_csv_line(line);
        if (!header_seen) {
            header_seen = true;
            for (std::size_t c = 1; c < cells.size(); ++c)
                table.order.push_back(partition_from_label(cells[c]));
            continue;
        }
        std::vector<BigInt> row;
        row.reserve(cells.size() - 1);
        for (std::size_t c = 1; c < cells.size(); ++c) row.emplace_back(cells[c]);
        table.values.push_back(std::move(row));
    }
    if (!table.order.empty()) table.n = table.order.front().n();
    if (table.values.size() != table.order.size())
        throw io_error("table_from_csv: row/column count mismatch");
    return table;
}

inline json table_to_json(const CharTable& table) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = table.n;
    json order = json::array();
    for (const auto& la : table.order) order.push_back(la.label());
    j["order"] = order;
    json values = json::array();
    for (const auto& row : table.values) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        values.push_back(r);
    }
    j["values"] = values;
    return j;
}

// ---------------------------------------------------------------- predict --

inline json report_to_json(const AsymptoticReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = r.n;
    j["q"] = r.q;
    j["logF_series"] = r.logF_series;
    j["logF_closed"] = r.logF_closed;
    j["hr_saddle"] = r.hr_saddle;
    j["hr_classic"] = r.hr_classic;
    j["p_exact"] = big_to_string(r.p_exact);
    json th;
    th["t0"] = r.thresholds.t0;
    th["t1"] = r.thresholds.t1;
    th["t2"] = r.thresholds.t2;
    th["t1_clamped"] = r.thresholds.t1_clamped;
    th["t2_clamped"] = r.thresholds.t2_clamped;
    j["thresholds"] = th;
    j["leading"] = r.leading;
    j["refined"] = r.refined;
    return j;
}

// ----------------------------------------------------------------- sample --

inline json estimate_to_json(const SampleEstimate& e) {
    json j;
    j["proportion"] = e.proportion;
    j["stderr"] = e.stderr_;
    j["n_samples"] = e.n_samples;
    j["n_trials"] = e.n_trials;
    return j;
}

inline json estimates_to_json(const ZeroTypeEstimates& est) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = est.n;
    j["samples"] = est.n_samples;
    j["n_trials"] = est.n_trials;
    json seed;
    seed["master_seed"] = est.seed.master_seed;
    seed["stream_index"] = est.seed.stream_index;
    j["seed"] = seed;
    json flags;
    flags["type_i"] = estimate_to_json(est.type_i);
    flags["type_ii"] = estimate_to_json(est.type_ii);
    flags["type_iii"] = estimate_to_json(est.type_iii);
    flags["poly"] = estimate_to_json(est.poly);
    j["estimates"] = flags;
    return j;
}

// ------------------------------------------------------------------ files --

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw io_error("write failed: " + path);
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace symchar::io
