#include "mfus/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace mfus {

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw Error("ParseError", where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw Error("ParseError", where + ": unknown key \"" + it.key() + "\"");
}

const json& need(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw Error("ParseError", where + ": missing key \"" + key + "\"");
    return j.at(key);
}

int label_of(const FusionCat& C, const json& j, const std::string& where) {
    if (!j.is_string()) throw Error("ParseError", where + ": labels are strings");
    try {
        return C.index_of(j.get<std::string>());
    } catch (const Error& e) {
        throw Error("ParseError", where + ": " + e.what());
    }
}

int small_int(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long>() < 0) throw Error("ParseError", where + ": expected a nonnegative integer");
    return j.get<int>();
}

} // namespace

json scalar_to_json(const Elem& x) {
    json c = json::array();
    for (const auto& s : x.coeff_strings()) c.push_back(s);
    return json{{"coeffs", c}};
}

Elem scalar_from_json(const json& j, const Field* f) {
    if (j.is_string()) return Elem(f, parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return Elem(f, j.get<long>());
    check_keys(j, {"coeffs"}, "scalar");
    const json& c = need(j, "coeffs", "scalar");
    if (!c.is_array() || static_cast<int>(c.size()) > f->degree())
        throw Error("ParseError", "scalar: coeffs must be an array of at most the field degree");
    std::vector<Q> q;
    for (const auto& s : c) {
        if (!s.is_string()) throw Error("ParseError", "scalar: coefficients are \"num/den\" strings");
        q.push_back(parse_rational(s.get<std::string>()));
    }
    q.resize(f->degree(), Q(0));
    return Elem(f, q);
}

json field_to_json(const Field* f) {
    json m = json::array();
    for (const auto& c : f->minpoly()) m.push_back(rational_string(c));
    return json{{"minpoly", m}};
}

const Field* field_from_json(const json& j) {
    check_keys(j, {"minpoly"}, "field");
    const json& m = need(j, "minpoly", "field");
    if (!m.is_array()) throw Error("ParseError", "field: minpoly must be an array");
    std::vector<Q> p;
    for (const auto& s : m) {
        if (!s.is_string()) throw Error("ParseError", "field: minpoly coefficients are strings");
        p.push_back(parse_rational(s.get<std::string>()));
    }
    return Field::create(p);
}

FusionFile load_fusion_json(const json& j, const std::string& origin) {
    const std::string W = origin;
    check_keys(j, {"name", "field", "labels", "unit_components", "dual", "fusion", "F", "F_default_one", "pairings",
                   "braiding", "center_field", "algebras", "comment"},
               W);
    const Field* f = field_from_json(need(j, "field", W));
    const json& lj = need(j, "labels", W);
    if (!lj.is_array() || lj.empty()) throw Error("ParseError", W + ": labels must be a nonempty array");
    std::vector<std::string> labels;
    for (const auto& l : lj) {
        if (!l.is_string()) throw Error("ParseError", W + ": labels are strings");
        labels.push_back(l.get<std::string>());
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : origin;
    FusionFile out;
    out.path = origin;
    FusionCat C(name, f, labels);
    const int n = C.rank();

    std::vector<int> units;
    for (const auto& u : need(j, "unit_components", W)) units.push_back(label_of(C, u, W + ".unit_components"));
    if (units.empty()) throw Error("ParseError", W + ": at least one unit component");
    C.set_units(units);

    const json& dj = need(j, "dual", W);
    if (!dj.is_object()) throw Error("ParseError", W + ".dual: expected an object");
    std::vector<int> dual(n, -1);
    for (auto it = dj.begin(); it != dj.end(); ++it)
        dual[label_of(C, json(it.key()), W + ".dual")] = label_of(C, it.value(), W + ".dual");
    C.set_dual(dual);

    // Fusion triples [a, b, c] or [a, b, c, N].
    for (const auto& t : need(j, "fusion", W)) {
        if (!t.is_array() || t.size() < 3 || t.size() > 4) throw Error("ParseError", W + ".fusion: entries are [a,b,c] or [a,b,c,N]");
        int a = label_of(C, t[0], W + ".fusion"), b = label_of(C, t[1], W + ".fusion"), c = label_of(C, t[2], W + ".fusion");
        C.set_N(a, b, c, t.size() == 4 ? small_int(t[3], W + ".fusion") : 1);
    }
    // With a single unit the unit rows may be left implicit.
    if (units.size() == 1)
        for (int a = 0; a < n; ++a) {
            C.set_N(units[0], a, a, 1);
            C.set_N(a, units[0], a, 1);
        }

    // F entries: key [a,b,c,d,e,f], mult [mu,nu,kappa,lambda]; value at
    // row (f,kappa,lambda), column (e,mu,nu).
    std::map<std::array<int, 4>, std::vector<std::tuple<int, int, Elem>>> entries;
    FusionCat probe = C;  // N is final here; use it for tree indexing
    probe.finalize();
    if (j.contains("F")) {
        for (const auto& e : j.at("F")) {
            check_keys(e, {"key", "mult", "value"}, W + ".F");
            const json& k = need(e, "key", W + ".F");
            if (!k.is_array() || k.size() != 6) throw Error("ParseError", W + ".F: key is [a,b,c,d,e,f]");
            int idx[6];
            for (int i = 0; i < 6; ++i) idx[i] = label_of(C, k[i], W + ".F");
            int mult[4] = {0, 0, 0, 0};
            if (e.contains("mult")) {
                if (!e.at("mult").is_array() || e.at("mult").size() != 4)
                    throw Error("ParseError", W + ".F: mult is [mu,nu,kappa,lambda]");
                for (int i = 0; i < 4; ++i) mult[i] = small_int(e.at("mult")[i], W + ".F");
            }
            const int a = idx[0], b = idx[1], c = idx[2], d = idx[3], ee = idx[4], ff = idx[5];
            if (mult[0] >= C.N(a, b, ee) || mult[1] >= C.N(ee, c, d) || mult[2] >= C.N(b, c, ff) || mult[3] >= C.N(a, ff, d))
                throw Error("ParseError", W + ".F: entry " + k.dump() + " is not an admissible tree pair");
            int col = probe.left_tree_index(a, b, c, d, ee, mult[0], mult[1]);
            int row = probe.right_tree_index(a, b, c, d, ff, mult[2], mult[3]);
            entries[{a, b, c, d}].emplace_back(row, col, scalar_from_json(need(e, "value", W + ".F"), f));
        }
    }
    const bool default_one = j.value("F_default_one", false);
    for (const auto& key : probe.admissible()) {
        const auto [a, b, c, d] = key;
        auto it = entries.find(key);
        const int R = static_cast<int>(probe.right_trees(a, b, c, d).size());
        const int L = static_cast<int>(probe.left_trees(a, b, c, d).size());
        if (it == entries.end()) {
            if (default_one && R == 1 && L == 1) {
                Mat m(f, 1, 1);
                m(0, 0) = Elem(f, 1);
                C.set_F(a, b, c, d, m);
            }
            continue;
        }
        Mat m(f, R, L);
        for (const auto& [r, cc, v] : it->second) m(r, cc) = v;
        C.set_F(a, b, c, d, m);
    }
    for (const auto& [key, v] : entries)
        if (!probe.has_F(key[0], key[1], key[2], key[3]))
            throw Error("ParseError", W + ".F: entry for a tuple without fusion trees");

    const json& pj = need(j, "pairings", W);
    check_keys(pj, std::set<std::string>(labels.begin(), labels.end()), W + ".pairings");
    for (int a = 0; a < n; ++a) {
        const json& pa = need(pj, labels[a], W + ".pairings");
        check_keys(pa, {"ev", "coev"}, W + ".pairings." + labels[a]);
        C.set_pairing(a, scalar_from_json(need(pa, "ev", W), f), scalar_from_json(need(pa, "coev", W), f));
    }
    C.finalize();
    out.cat = std::move(C);

    if (j.contains("braiding")) {
        BraidingData B;
        const FusionCat& D = out.cat;
        for (const auto& e : j.at("braiding")) {
            check_keys(e, {"key", "mult", "value"}, W + ".braiding");
            const json& k = need(e, "key", W + ".braiding");
            if (!k.is_array() || k.size() != 3) throw Error("ParseError", W + ".braiding: key is [a,b,c]");
            int a = label_of(D, k[0], W), b = label_of(D, k[1], W), c = label_of(D, k[2], W);
            int row = 0, col = 0;
            if (e.contains("mult")) {
                row = small_int(e.at("mult")[0], W);
                col = small_int(e.at("mult")[1], W);
            }
            if (row >= D.N(b, a, c) || col >= D.N(a, b, c)) throw Error("ParseError", W + ".braiding: inadmissible entry");
            auto& m = B.R[{a, b, c}];
            if (m.rows() == 0) m = Mat(f, D.N(b, a, c), D.N(a, b, c));
            m(row, col) = scalar_from_json(need(e, "value", W), f);
        }
        // blocks with a unit argument are identities
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c : D.products(a, b))
                    if ((D.is_unit(a) || D.is_unit(b)) && !B.R.count({a, b, c}))
                        B.R[{a, b, c}] = Mat::identity(f, D.N(a, b, c));
        out.braiding = std::move(B);
    }
    if (j.contains("center_field")) {
        const json& cf = j.at("center_field");
        check_keys(cf, {"minpoly", "generator"}, W + ".center_field");
        Extension ext;
        ext.field = field_from_json(json{{"minpoly", need(cf, "minpoly", W)}});
        ext.generator = scalar_from_json(need(cf, "generator", W), ext.field);
        out.center_field = ext;
    }
    if (j.contains("algebras")) out.algebras = j.at("algebras");
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("ParseError", path + ": " + e.what());
    }
}

FusionFile load_fusion_file(const std::string& path) {
    try {
        return load_fusion_json(read_json_file(path), path);
    } catch (const json::exception& e) {
        throw Error("ParseError", path + ": " + e.what());
    }
}

json fusion_to_json(const FusionCat& C) {
    json j;
    j["name"] = C.name();
    j["field"] = field_to_json(C.field());
    j["labels"] = C.labels();
    json u = json::array();
    for (int a : C.units()) u.push_back(C.label(a));
    j["unit_components"] = u;
    json d = json::object();
    for (int a = 0; a < C.rank(); ++a) d[C.label(a)] = C.label(C.dual(a));
    j["dual"] = d;
    json fus = json::array();
    for (int a = 0; a < C.rank(); ++a)
        for (int b = 0; b < C.rank(); ++b)
            for (int c : C.products(a, b)) {
                json t = {C.label(a), C.label(b), C.label(c)};
                if (C.N(a, b, c) != 1) t.push_back(C.N(a, b, c));
                fus.push_back(t);
            }
    j["fusion"] = fus;
    json F = json::array();
    for (const auto& [a, b, c, d] : C.admissible()) {
        auto lt = C.left_trees(a, b, c, d);
        auto rt = C.right_trees(a, b, c, d);
        const Mat& m = C.F(a, b, c, d);
        for (size_t r = 0; r < rt.size(); ++r)
            for (size_t l = 0; l < lt.size(); ++l) {
                const Elem& v = m(static_cast<int>(r), static_cast<int>(l));
                if (v.is_zero()) continue;
                json e;
                e["key"] = {C.label(a), C.label(b), C.label(c), C.label(d), C.label(lt[l].e), C.label(rt[r].f)};
                e["mult"] = {lt[l].mu, lt[l].nu, rt[r].kappa, rt[r].lambda};
                e["value"] = scalar_to_json(v);
                F.push_back(e);
            }
    }
    j["F"] = F;
    json p = json::object();
    for (int a = 0; a < C.rank(); ++a) p[C.label(a)] = {{"ev", scalar_to_json(C.ev(a))}, {"coev", scalar_to_json(C.coev(a))}};
    j["pairings"] = p;
    return j;
}

FusionCat center_ready(const FusionFile& F) {
    return F.center_field ? extend_scalars(F.cat, F.center_field->field, F.center_field->generator) : F.cat;
}

} // namespace mfus
