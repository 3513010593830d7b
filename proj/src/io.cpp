#include "lameball/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace lameball {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

VshFamily parse_family(const std::string& s) {
    if (s == "+") return VshFamily::Plus;
    if (s == "-") return VshFamily::Minus;
    if (s == "0") return VshFamily::Zero;
    throw std::runtime_error("coefficient file: unknown family tag '" + s + "'");
}

ordered_json header(int band_limit, const char* kind) {
    ordered_json doc;
    doc["band_limit"] = band_limit;
    doc["convention"] = kConventionTag;
    doc["kind"] = kind;
    doc["coefficients"] = ordered_json::array();
    return doc;
}

json parse_document(std::istream& is, const char* kind) {
    json doc;
    try {
        doc = json::parse(is);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("coefficient file: malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("band_limit") || !doc.contains("coefficients"))
        throw std::runtime_error("coefficient file: missing band_limit or coefficients");
    if (doc.value("convention", "") != kConventionTag)
        throw std::runtime_error("coefficient file: convention tag is not '" +
                                 std::string(kConventionTag) + "'");
    if (doc.value("kind", "") != kind)
        throw std::runtime_error(std::string("coefficient file: expected kind '") + kind + "'");
    return doc;
}

} // namespace

void write_coefficients(std::ostream& os, const VshExpansion& e) {
    ordered_json doc = header(e.band_limit, "vector");
    for (VshFamily fam : {VshFamily::Plus, VshFamily::Minus, VshFamily::Zero}) {
        const int l0 = (fam == VshFamily::Plus) ? 0 : 1;
        for (int l = l0; l <= e.band_limit; ++l)
            for (int m = -l; m <= l; ++m) {
                const double v = e.at(fam, l, m);
                if (v == 0.0) continue;
                ordered_json rec;
                rec["family"] = family_name(fam);
                rec["l"] = l;
                rec["m"] = m;
                rec["value"] = v;
                doc["coefficients"].push_back(std::move(rec));
            }
    }
    os << doc.dump(2) << "\n";
}

void write_coefficients(std::ostream& os, const ScalarExpansion& g) {
    ordered_json doc = header(g.band_limit, "scalar");
    for (int l = 0; l <= g.band_limit; ++l)
        for (int m = -l; m <= l; ++m) {
            const double v = g.at(l, m);
            if (v == 0.0) continue;
            ordered_json rec;
            rec["l"] = l;
            rec["m"] = m;
            rec["value"] = v;
            doc["coefficients"].push_back(std::move(rec));
        }
    os << doc.dump(2) << "\n";
}

void write_coefficients_file(const std::string& path, const VshExpansion& e) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_coefficients(os, e);
}

VshExpansion read_vector_coefficients(std::istream& is) {
    const json doc = parse_document(is, "vector");
    VshExpansion e(doc.at("band_limit").get<int>());
    std::set<std::tuple<std::string, int, int>> seen;
    for (const auto& rec : doc.at("coefficients")) {
        const std::string fam_s = rec.at("family").get<std::string>();
        const int l = rec.at("l").get<int>();
        const int m = rec.at("m").get<int>();
        if (!seen.insert({fam_s, l, m}).second)
            throw std::runtime_error("coefficient file: duplicate record");
        try {
            e.at(parse_family(fam_s), l, m) = rec.at("value").get<double>();
        } catch (const std::domain_error& ex) {
            throw std::runtime_error(std::string("coefficient file: ") + ex.what());
        }
    }
    return e;
}

ScalarExpansion read_scalar_coefficients(std::istream& is) {
    const json doc = parse_document(is, "scalar");
    ScalarExpansion g(doc.at("band_limit").get<int>());
    std::set<std::pair<int, int>> seen;
    for (const auto& rec : doc.at("coefficients")) {
        const int l = rec.at("l").get<int>();
        const int m = rec.at("m").get<int>();
        if (!seen.insert({l, m}).second)
            throw std::runtime_error("coefficient file: duplicate record");
        try {
            g.at(l, m) = rec.at("value").get<double>();
        } catch (const std::domain_error& ex) {
            throw std::runtime_error(std::string("coefficient file: ") + ex.what());
        }
    }
    return g;
}

VshExpansion read_vector_coefficients_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_vector_coefficients(is);
}

SampleSet read_samples(std::istream& is) {
    SampleSet out;
    bool has_field = false, decided = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream row(line);
        std::vector<double> vals;
        double v;
        while (row >> v) vals.push_back(v);
        if (vals.empty()) continue;
        if (line.find('#') != std::string::npos && line.find_first_not_of(" \t") == line.find('#'))
            continue;
        if (vals.size() != 4 && vals.size() != 7)
            throw std::runtime_error("sample file: line " + std::to_string(lineno) +
                                     ": expected 4 or 7 columns");
        if (!decided) {
            has_field = (vals.size() == 7);
            decided = true;
        } else if (has_field != (vals.size() == 7)) {
            throw std::runtime_error("sample file: inconsistent column count");
        }
        Vec3 eta(vals[0], vals[1], vals[2]);
        if (std::abs(eta.norm() - 1.0) > 1e-9)
            throw std::runtime_error("sample file: line " + std::to_string(lineno) +
                                     ": node is not on the unit sphere");
        if (vals[3] <= 0.0)
            throw std::runtime_error("sample file: line " + std::to_string(lineno) +
                                     ": weight must be positive");
        out.grid.nodes.push_back(eta);
        out.grid.weights.push_back(vals[3]);
        if (has_field) {
            if (!out.field) out.field.emplace();
            out.field->emplace_back(vals[4], vals[5], vals[6]);
        }
    }
    if (out.grid.nodes.empty()) throw std::runtime_error("sample file: no sample rows");
    // exactness is unknown for external node sets; leave it at 0 so analysis
    // preconditions force the caller to state it
    out.grid.exactness_degree = 0;
    return out;
}

SampleSet read_samples_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_samples(is);
}

void write_samples(std::ostream& os, const SphereGrid& grid, const FieldSamples* field) {
    os << "# eta1 eta2 eta3 weight" << (field ? " f1 f2 f3" : "") << "\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        os << fmt17(grid.nodes[i].x()) << " " << fmt17(grid.nodes[i].y()) << " "
           << fmt17(grid.nodes[i].z()) << " " << fmt17(grid.weights[i]);
        if (field)
            os << " " << fmt17((*field)[i].x()) << " " << fmt17((*field)[i].y()) << " "
               << fmt17((*field)[i].z());
        os << "\n";
    }
}

FieldSamples builtin_field(const std::string& name, const SphereGrid& grid) {
    FieldSamples out(grid.size());
    if (name == "identity") {
        for (std::size_t i = 0; i < grid.size(); ++i) out[i] = grid.nodes[i];
        return out;
    }
    if (name == "constant-e3") {
        for (std::size_t i = 0; i < grid.size(); ++i) out[i] = Vec3(0, 0, 1);
        return out;
    }
    if (name.rfind("vsh:", 0) == 0) {
        std::istringstream parts(name.substr(4));
        std::string fam_s, l_s, m_s;
        if (std::getline(parts, fam_s, ':') && std::getline(parts, l_s, ':') &&
            std::getline(parts, m_s)) {
            const VshFamily fam = parse_family(fam_s);
            const HarmonicIndex idx(std::stoi(l_s), std::stoi(m_s));
            require_compatible(fam, idx.degree);
            for (std::size_t i = 0; i < grid.size(); ++i)
                out[i] = eval_vsh(fam, idx, UnitVector(grid.nodes[i]));
            return out;
        }
    }
    throw std::runtime_error("unknown built-in field '" + name +
                             "' (expected identity, constant-e3 or vsh:<family>:<l>:<m>)");
}

} // namespace lameball
