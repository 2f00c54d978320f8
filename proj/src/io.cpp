#include "oacensus/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace oac {

using json = nlohmann::ordered_json;

namespace {

// Exact integers: plain JSON number inside the 53-bit safe range, decimal
// string beyond it.
json num(i128 x) {
    const i128 safe = i128(1) << 53;
    if (x > -safe && x < safe) return json((long long)x);
    return json(to_string(x));
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_io("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail_io(path + ": " + e.what());
    }
    return j;
}

std::vector<int> json_int_table(const json& j, long& n, const std::string& path) {
    if (!j.is_array() || j.empty()) fail_io(path + ": \"table\" must be a non-empty array");
    n = long(j.size());
    std::vector<int> flat;
    flat.reserve(size_t(n) * size_t(n));
    for (const auto& row : j) {
        if (!row.is_array() || long(row.size()) != n)
            fail_io(path + ": table rows must all have length n");
        for (const auto& v : row) flat.push_back(v.get<int>());
    }
    return flat;
}

} // namespace

FiniteGroup GroundStructure::as_group() const {
    if (group) return *group;
    if (abelian) return cayley_table(*abelian);
    fail_precondition("ground structure is a quasigroup, not a group");
}

Quasigroup GroundStructure::as_quasigroup_table() const {
    if (quasigroup) return *quasigroup;
    return as_quasigroup(as_group());
}

GroundStructure load_ground(const std::string& path) {
    json j = parse_file(path);
    GroundStructure g;
    if (!j.contains("kind")) fail_io(path + ": missing \"kind\"");
    g.kind = j["kind"].get<std::string>();
    if (g.kind == "abelian") {
        if (!j.contains("orders")) fail_io(path + ": abelian ground needs \"orders\"");
        g.abelian.emplace(j["orders"].get<std::vector<long>>());
    } else if (g.kind == "table") {
        long n = 0;
        FiniteGroup fg;
        fg.table = json_int_table(j.at("table"), n, path);
        fg.n = n;
        fg.identity = j.value("identity", 0);
        GroupCheck chk = validate_group(fg);
        if (!chk.pass) fail_precondition(path + ": not a group: " + chk.detail);
        g.group = std::move(fg);
    } else if (g.kind == "quasigroup") {
        long n = 0;
        Quasigroup q;
        q.table = json_int_table(j.at("table"), n, path);
        q.n = n;
        LatinCheck chk = validate_latin(q);
        if (!chk.pass) fail_precondition(path + ": not a latin square: " + chk.detail);
        g.quasigroup = std::move(q);
    } else {
        fail_io(path + ": unknown kind \"" + g.kind + "\"");
    }
    return g;
}

std::string ground_to_json(const GroundStructure& g) {
    json j;
    j["kind"] = g.kind;
    if (g.abelian) {
        j["orders"] = g.abelian->orders();
    } else {
        const std::vector<int>* table = nullptr;
        long n = 0;
        if (g.group) {
            table = &g.group->table;
            n = g.group->n;
            j["identity"] = g.group->identity;
        } else if (g.quasigroup) {
            table = &g.quasigroup->table;
            n = g.quasigroup->n;
        }
        json rows = json::array();
        for (long r = 0; r < n; ++r) {
            json row = json::array();
            for (long c = 0; c < n; ++c) row.push_back((*table)[size_t(r) * n + c]);
            rows.push_back(std::move(row));
        }
        j["table"] = std::move(rows);
    }
    return j.dump(2) + "\n";
}

OrthogonalArray load_oa(const std::string& path) {
    std::string content = read_text_file(path);
    size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail_io(path + ": empty file");
    OrthogonalArray oa;
    if (content[first] == '{') {
        json j;
        try {
            j = json::parse(content);
        } catch (const std::exception& e) {
            fail_io(path + ": " + e.what());
        }
        oa.d = j.at("d").get<int>();
        oa.k = j.at("k").get<int>();
        oa.n = j.at("n").get<long>();
        oa.provenance = j.value("provenance", "");
        const auto& rows = j.at("rows");
        oa.rows.reserve(rows.size() * size_t(oa.d));
        for (const auto& row : rows) {
            if (long(row.size()) != oa.d) fail_io(path + ": row arity != d");
            for (const auto& v : row) oa.rows.push_back(v.get<int32_t>());
        }
    } else {
        std::istringstream in(content);
        if (!(in >> oa.d >> oa.k >> oa.n)) fail_io(path + ": bad text header, want \"d k n\"");
        int32_t v;
        while (in >> v) oa.rows.push_back(v);
        if (oa.d < 1 || oa.rows.size() % size_t(oa.d) != 0)
            fail_io(path + ": row data not a multiple of d");
        oa.provenance = "file";
    }
    return oa;
}

std::string oa_to_json(const OrthogonalArray& oa) {
    json j;
    j["d"] = oa.d;
    j["k"] = oa.k;
    j["n"] = oa.n;
    json rows = json::array();
    for (size_t i = 0; i < oa.row_count(); ++i) {
        json row = json::array();
        for (int c = 0; c < oa.d; ++c) row.push_back(oa.at(i, c));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["provenance"] = oa.provenance;
    return j.dump() + "\n";
}

std::string oa_to_text(const OrthogonalArray& oa) {
    std::ostringstream out;
    out << oa.d << ' ' << oa.k << ' ' << oa.n << '\n';
    for (size_t i = 0; i < oa.row_count(); ++i) {
        for (int c = 0; c < oa.d; ++c) out << (c ? " " : "") << oa.at(i, c);
        out << '\n';
    }
    return out.str();
}

void save_oa(const OrthogonalArray& oa, const std::string& path, const std::string& format) {
    if (format == "json") write_text_file(path, oa_to_json(oa));
    else if (format == "text") write_text_file(path, oa_to_text(oa));
    else fail_io("unknown OA format \"" + format + "\" (want json or text)");
}

Coloring load_coloring(const std::string& path) {
    json j = parse_file(path);
    long n = j.at("n").get<long>();
    int r = j.at("r").get<int>();
    auto colors = j.at("colors").get<std::vector<int>>();
    return Coloring(n, r, std::move(colors));
}

std::string coloring_to_json(const Coloring& c) {
    json j;
    j["n"] = c.n();
    j["r"] = c.r();
    j["colors"] = c.assign();
    return j.dump() + "\n";
}

std::string census_to_json(const PatternCensus& pc) {
    json j;
    j["d"] = pc.d;
    j["k"] = pc.k;
    j["n"] = pc.n;
    j["r"] = pc.r;
    json counts = json::array();
    for (const auto& [v, s] : pc.counts) {
        json e;
        e["v"] = v;
        e["s"] = num(s);
        counts.push_back(std::move(e));
    }
    j["counts"] = std::move(counts);
    j["M"] = num(pc.mono);
    json mi = json::array(), si = json::array();
    for (const auto& m : pc.mono_color) mi.push_back(num(m));
    for (const auto& s : pc.missing) si.push_back(num(s));
    j["M_i"] = std::move(mi);
    j["S_i"] = std::move(si);
    j["R_strict"] = num(pc.r_strict);
    j["R_covering"] = num(pc.r_covering);
    if (pc.d == 3) j["T21"] = num(pc.t21);
    return j.dump(2) + "\n";
}

namespace {

json report_json(const IdentityReport& rep) {
    json j;
    j["identity"] = rep.identity;
    j["lhs"] = num(rep.lhs);
    j["rhs"] = num(rep.rhs);
    j["residual"] = num(rep.residual);
    j["verdict"] = rep.pass ? "pass" : "fail";
    j["witness"] = rep.witness;
    j["relation"] = rep.relation == IdentityReport::Relation::equal ? "==" : ">=";
    j["hard"] = rep.hard;
    j["note"] = rep.note;
    return j;
}

} // namespace

std::string report_to_json(const IdentityReport& rep) { return report_json(rep).dump(2) + "\n"; }

std::string reports_to_json(const std::vector<IdentityReport>& reps) {
    json arr = json::array();
    for (const auto& rep : reps) arr.push_back(report_json(rep));
    return arr.dump(2) + "\n";
}

namespace {

std::string argmin_str(const SearchResult& sr) {
    std::string s;
    bool digits = sr.r <= 10;
    for (size_t i = 0; i < sr.argmin.size(); ++i) {
        if (digits) s += char('0' + sr.argmin[i]);
        else s += (i ? "," : "") + std::to_string(sr.argmin[i]);
    }
    return s;
}

} // namespace

std::string search_result_to_json(const SearchResult& sr) {
    json j;
    j["objective"] = sr.objective_name;
    j["n"] = sr.n;
    j["r"] = sr.r;
    j["mode"] = sr.mode;
    j["min"] = num(sr.objective);
    j["argmin"] = argmin_str(sr);
    j["examined"] = sr.examined;
    j["seed"] = sr.seed;
    j["achieved_zero"] = sr.achieved_zero;
    return j.dump(2) + "\n";
}

std::string search_result_to_csv(const SearchResult& sr) {
    std::ostringstream out;
    out << sr.n << ',' << sr.r << ',' << sr.mode << ',' << to_string(sr.objective) << ','
        << argmin_str(sr) << ',' << sr.seed << ',' << sr.elapsed_ms << '\n';
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail_io("cannot write " + path);
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_io("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace oac
