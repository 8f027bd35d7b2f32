#include "novikov/deffile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace novikov {

using ordered_json = nlohmann::ordered_json;

Algebra parse_definition(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        const auto& fd = doc.at("field");
        std::string kind = fd.at("kind").get<std::string>();
        Field field = Field::rationals();
        if (kind == "prime-field") {
            field = Field::prime(fd.at("p").get<unsigned long>());
        } else if (kind != "rationals") {
            throw ParseError("unknown field kind '" + kind + "'");
        }

        int dim = doc.at("dim").get<int>();
        std::vector<std::string> labels = doc.at("basis").get<std::vector<std::string>>();
        if (static_cast<int>(labels.size()) != dim) {
            throw ParseError("dim does not match basis label count");
        }

        std::map<std::pair<int, int>, TableRow> table;
        for (const auto& entry : doc.at("table")) {
            int i = entry.at("i").get<int>();
            int j = entry.at("j").get<int>();
            if (table.count({i, j})) {
                throw ParseError("duplicate table entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
            }
            TableRow row;
            for (const auto& term : entry.at("terms")) {
                row.emplace_back(term.at("k").get<int>(),
                                 field.parse(term.at("c").get<std::string>()));
            }
            table.emplace(std::make_pair(i, j), std::move(row));
        }
        return Algebra(field, std::move(labels), std::move(table));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad definition file: ") + e.what());
    }
}

std::string emit_definition(const Algebra& a) {
    ordered_json doc;
    ordered_json fd;
    if (a.field().kind() == FieldKind::Rationals) {
        fd["kind"] = "rationals";
    } else {
        fd["kind"] = "prime-field";
        fd["p"] = a.field().characteristic();
    }
    doc["field"] = fd;
    doc["dim"] = a.dim();
    doc["basis"] = a.labels();
    ordered_json table = ordered_json::array();
    for (const auto& [ij, row] : a.table()) {
        ordered_json entry;
        entry["i"] = ij.first;
        entry["j"] = ij.second;
        ordered_json terms = ordered_json::array();
        for (const auto& [k, c] : row) {
            ordered_json term;
            term["k"] = k;
            term["c"] = c.str();
            terms.push_back(std::move(term));
        }
        entry["terms"] = std::move(terms);
        table.push_back(std::move(entry));
    }
    doc["table"] = std::move(table);
    return doc.dump(2) + "\n";
}

Algebra load_definition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_definition(buf.str());
}

void save_definition_file(const Algebra& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << emit_definition(a);
}

}  // namespace novikov
