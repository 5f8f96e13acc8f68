#include "kkr/io.hpp"

#include "kkr/errors.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace kkr {

json to_json(const RiggedConfiguration& rc) {
    json layers = json::array();
    for (const auto& layer : rc.layers) {
        json rows = json::array();
        for (const auto& r : layer)
            rows.push_back({r.length, r.rigging});
        layers.push_back({{"rows", rows}});
    }
    return {{"n", rc.n}, {"quantum", rc.quantum}, {"layers", layers}};
}

namespace {

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

} // namespace

RiggedConfiguration rc_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("configuration must be a JSON object");
    for (const char* key : {"n", "quantum", "layers"})
        if (!j.contains(key))
            throw ParseError(std::string("missing key \"") + key + "\"");
    RiggedConfiguration rc;
    rc.n = as_int(j["n"], "n");
    if (!j["quantum"].is_array())
        throw ParseError("quantum: expected an array");
    for (std::size_t i = 0; i < j["quantum"].size(); ++i)
        rc.quantum.push_back(as_int(j["quantum"][i], "quantum[" + std::to_string(i) + "]"));
    if (!j["layers"].is_array())
        throw ParseError("layers: expected an array");
    for (std::size_t a = 0; a < j["layers"].size(); ++a) {
        const std::string where = "layers[" + std::to_string(a) + "]";
        const json& layer = j["layers"][a];
        if (!layer.is_object() || !layer.contains("rows") || !layer["rows"].is_array())
            throw ParseError(where + ": expected {\"rows\": [...]}");
        std::vector<Row> rows;
        for (std::size_t i = 0; i < layer["rows"].size(); ++i) {
            const std::string rw = where + ".rows[" + std::to_string(i) + "]";
            const json& row = layer["rows"][i];
            if (!row.is_array() || row.size() != 2)
                throw ParseError(rw + ": expected [length, rigging]");
            rows.push_back(Row{as_int(row[0], rw + "[0]"), as_int(row[1], rw + "[1]")});
        }
        rc.layers.push_back(std::move(rows));
    }
    return rc;
}

RiggedConfiguration parse_rc(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return rc_from_json(j);
}

RiggedConfiguration read_rc(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_rc(text);
}

json to_json(const KkrTrace& trace) {
    json removals = json::array();
    for (const auto& r : trace.removals) {
        json steps = json::array();
        for (const auto& s : r.steps) {
            json boxes = json::array();
            for (const auto& b : s.boxes)
                boxes.push_back({{"layer", b.layer}, {"row", b.row}, {"col", b.col}});
            steps.push_back({{"letter", s.letter}, {"boxes", boxes}});
        }
        removals.push_back(
            {{"quantum_row", r.quantum_row}, {"tableau", to_string(r.tableau)}, {"steps", steps}});
    }
    return {{"removals", removals}};
}

json to_json(const KkrScattering& s) {
    json steps = json::array();
    for (const auto& st : s.steps) {
        json cands = json::array();
        for (const auto& c : st.candidates)
            cands.push_back({{"row", c.row}, {"length", c.length}, {"rigging", c.rigging}});
        steps.push_back({{"mode", st.mode},
                         {"candidates", cands},
                         {"chosen", st.chosen},
                         {"tableau", to_string(st.tableau)}});
    }
    return {{"level", s.data.level},
            {"data", to_string(s.data)},
            {"rows", s.row_of},
            {"steps", steps}};
}

} // namespace kkr
