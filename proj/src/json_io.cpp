#include "qw/json_io.hpp"

#include <sstream>

namespace qw {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + ": expected integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> int_matrix(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) out.push_back(int_array(row, what));
    return out;
}

}  // namespace

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    try {
        return Partition(int_array(j, "partition"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("partition: ") + e.what());
    }
}

json to_json(const ColumnComposition& c) { return json{{"columns", c.column_lengths()}}; }

ColumnComposition column_composition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("columns"))
        throw ParseError("column composition: expected {\"columns\": [...]}");
    try {
        return ColumnComposition(int_array(j["columns"], "column composition"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("column composition: ") + e.what());
    }
}

json to_json(const Filling& f) {
    json j;
    j["n"] = f.n();
    if (f.is_partition_shape())
        j["rows"] = f.rows();
    else
        j["columns"] = f.columns();
    return j;
}

Filling filling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("filling: expected {\"n\": int, \"rows\"|\"columns\": [[...],...]}");
    int n = j["n"].get<int>();
    try {
        if (j.contains("rows")) return Filling::from_rows(n, int_matrix(j["rows"], "filling"));
        if (j.contains("columns")) return Filling(n, int_matrix(j["columns"], "filling"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("filling: ") + e.what());
    }
    throw ParseError("filling: missing \"rows\" or \"columns\"");
}

json to_json(const GTPattern& t) { return json{{"n", t.n()}, {"rows", t.rows()}}; }

GTPattern gt_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows")) throw ParseError("gt: expected {\"n\":..., \"rows\":...}");
    try {
        GTPattern t(int_matrix(j["rows"], "gt"));
        if (j.contains("n") && j["n"].get<int>() != t.n())
            throw ParseError("gt: n does not match the number of rows");
        return t;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("gt: ") + e.what());
    }
}

json to_json(const POP& p) {
    json ov = json::object();
    for (const auto& [key, parts] : p.overlay())
        ov[std::to_string(key.first) + "," + std::to_string(key.second)] = parts;
    return json{{"gt", to_json(p.gt())}, {"overlay", ov}};
}

POP pop_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gt") || !j.contains("overlay"))
        throw ParseError("pop: expected {\"gt\":..., \"overlay\":...}");
    GTPattern t = gt_from_json(j["gt"]);
    POP::OverlayMap ov;
    if (!j["overlay"].is_object()) throw ParseError("pop: overlay must be an object");
    for (const auto& [key, parts] : j["overlay"].items()) {
        std::istringstream is(key);
        int i = 0, jj = 0;
        char comma = 0;
        if (!(is >> i >> comma >> jj) || comma != ',')
            throw ParseError("pop: overlay key must look like \"i,j\"");
        ov.emplace(std::pair{i, jj}, int_array(parts, "pop overlay"));
    }
    try {
        return POP(std::move(t), std::move(ov));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("pop: ") + e.what());
    }
}

json to_json(const QXPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json term;
        term["q"] = m.q;
        term["x"] = m.x;
        if (m.t != 0) term["t"] = m.t;
        term["c"] = c.get_str();
        out.push_back(std::move(term));
    }
    return out;
}

QXPoly qxpoly_from_json(const json& j, int nvars) {
    if (!j.is_array()) throw ParseError("polynomial: expected an array of terms");
    QXPoly out(nvars);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("q") || !term.contains("x") || !term.contains("c"))
            throw ParseError("polynomial: each term needs \"q\", \"x\", \"c\"");
        Monomial m;
        m.q = term["q"].get<int>();
        m.t = term.contains("t") ? term["t"].get<int>() : 0;
        m.x = int_array(term["x"], "polynomial");
        if (static_cast<int>(m.x.size()) != nvars)
            throw ParseError("polynomial: x-exponent length mismatch");
        if (!term["c"].is_string()) throw ParseError("polynomial: \"c\" must be a decimal string");
        out.add_term(m, mpz_class(term["c"].get<std::string>()));
    }
    return out;
}

json to_json(const CLWord& w) {
    json out = json::array();
    for (const CLAtom& a : w.atoms())
        out.push_back(json{{"p", a.p}, {"q", a.q}, {"t", a.t_exp}});
    return out;
}

std::string polynomial_text(const QXPoly& p) {
    if (p.is_zero()) return "0";
    // group terms by (t-exponent, x-exponents); q-dependence goes in the
    // coefficient slot
    std::map<std::pair<int, std::vector<int>>, std::map<int, mpz_class>,
             std::greater<std::pair<int, std::vector<int>>>> groups;
    for (const auto& [m, c] : p.terms()) groups[{m.t, m.x}][m.q] = c;
    std::ostringstream os;
    bool first_group = true;
    for (const auto& [key, qcoeffs] : groups) {
        const auto& [t, x] = key;
        std::string qpart;
        {
            std::ostringstream qs;
            bool first = true, multi = qcoeffs.size() > 1;
            for (const auto& [qe, c] : qcoeffs) {
                mpz_class a = c;
                if (first) {
                    if (a < 0) {
                        qs << "-";
                        a = -a;
                    }
                } else {
                    qs << (a < 0 ? "-" : "+");
                    if (a < 0) a = -a;
                }
                first = false;
                if (a != 1 || qe == 0) qs << a.get_str();
                if (qe != 0) {
                    qs << "q";
                    if (qe != 1) qs << "^" << qe;
                }
            }
            qpart = qs.str();
            if (multi) qpart = "(" + qpart + ")";
        }
        std::ostringstream xs;
        if (t != 0) {
            xs << " t";
            if (t != 1) xs << "^" << t;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            xs << " x" << (i + 1);
            if (x[i] != 1) xs << "^" << x[i];
        }
        std::string xpart = xs.str();
        if (!first_group) os << " + ";
        first_group = false;
        if (xpart.empty()) {
            os << qpart;
        } else if (qpart == "1") {
            os << xpart.substr(1);
        } else {
            os << qpart << xpart;
        }
    }
    return os.str();
}

}  // namespace qw
