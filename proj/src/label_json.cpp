#include "quiver/label_json.hpp"

#include <stdexcept>

namespace quiver {

using nlohmann::json;

json label_to_json(const MarkedColoredPartition& mcp, std::optional<CyclicColor> class_color) {
    json rows = json::array();
    for (const MarkedRow& r : mcp.rows())
        rows.push_back({{"length", r.length}, {"color", r.color}, {"mark", r.mark}});
    json j;
    j["n"] = mcp.modulus();
    j["rows"] = rows;
    j["class_color"] = class_color ? json(class_color->rep()) : json(nullptr);
    return j;
}

LabelDocument label_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("label document: expected {n, rows, [class_color]}");
    int n = j.at("n").get<int>();
    std::vector<MarkedRow> rows;
    for (const json& r : j.at("rows")) {
        MarkedRow row;
        row.length = r.at("length").get<int>();
        row.color = r.at("color").get<int>();
        row.mark = r.contains("mark") ? r.at("mark").get<int>() : 0;
        rows.push_back(row);
    }
    LabelDocument doc{MarkedColoredPartition(std::move(rows), n), std::nullopt};
    if (j.contains("class_color") && !j.at("class_color").is_null())
        doc.class_color = CyclicColor(j.at("class_color").get<int>(), n);
    return doc;
}

std::string serialize_label(const LabelDocument& doc) {
    return label_to_json(doc.label, doc.class_color).dump();
}

LabelDocument parse_label(const std::string& line) {
    return label_from_json(json::parse(line));
}

json orbit_record_to_json(const OrbitRecord& rec) {
    json j = label_to_json(rec.label.as_marked(), rec.class_color);
    j["dim"] = rec.dim;
    j["signature"] = rec.ambient.counts();
    j["zero_vector"] = rec.label.zero_vector();
    return j;
}

namespace {

mpq_class entry_from_json(const json& e) {
    if (e.is_number_integer()) return mpq_class(e.get<long>());
    if (e.is_string()) {
        mpq_class q;
        if (q.set_str(e.get<std::string>(), 10) != 0)
            throw std::invalid_argument("pair document: bad rational entry");
        q.canonicalize();
        return q;
    }
    throw std::invalid_argument("pair document: entries must be integers or \"p/q\" strings");
}

}  // namespace

PairDocument pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("dims") || !j.contains("blocks"))
        throw std::invalid_argument("pair document: expected {n, dims, blocks, vector}");
    int n = j.at("n").get<int>();
    std::vector<long long> dims = j.at("dims").get<std::vector<long long>>();
    if (static_cast<int>(dims.size()) != n)
        throw std::invalid_argument("pair document: dims must list one dimension per color");
    Rationals fld;
    ColoredSpace space{Signature(dims)};

    const json& blocks = j.at("blocks");
    if (!blocks.is_array() || static_cast<int>(blocks.size()) != n)
        throw std::invalid_argument("pair document: one block per color required");
    std::vector<Matrix<Rationals>> mats;
    for (int c = 0; c < n; ++c) {
        int rows = space.dim(c + 1), cols = space.dim(c);
        const json& b = blocks.at(c);
        if (static_cast<int>(b.size()) != rows)
            throw std::invalid_argument("pair document: block row count mismatch");
        Matrix<Rationals> m(fld, rows, cols);
        for (int r = 0; r < rows; ++r) {
            const json& row = b.at(r);
            if (static_cast<int>(row.size()) != cols)
                throw std::invalid_argument("pair document: block column count mismatch");
            for (int cc = 0; cc < cols; ++cc) m.at(r, cc) = entry_from_json(row.at(cc));
        }
        mats.push_back(std::move(m));
    }
    BlockNilpotent<Rationals> x(fld, space, std::move(mats));

    ColoredVector<Rationals> v = zero_vector<Rationals>();
    if (j.contains("vector") && !j.at("vector").is_null()) {
        const json& jv = j.at("vector");
        int color = jv.at("color").get<int>();
        if (color < 0 || color >= n)
            throw std::invalid_argument("pair document: vector color out of range");
        std::vector<mpq_class> coords;
        for (const json& e : jv.at("coords")) coords.push_back(entry_from_json(e));
        if (static_cast<int>(coords.size()) != space.dim(color))
            throw std::invalid_argument("pair document: vector length mismatch");
        bool zero = true;
        for (const mpq_class& c : coords)
            if (c != 0) zero = false;
        if (!zero) v = ColoredVector<Rationals>{color, std::move(coords)};
    }
    return PairDocument{std::move(v), std::move(x)};
}

}  // namespace quiver
