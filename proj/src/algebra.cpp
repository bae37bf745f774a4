#include "mfus/algebra.hpp"

namespace mfus {

namespace {

void compare(const FusionCat& C, const Mor& lhs, const Mor& rhs, const std::string& kind,
             std::vector<Violation>& out) {
    for (int d = 0; d < C.rank(); ++d)
        if (lhs.blocks[d] != rhs.blocks[d]) out.push_back({kind, "(" + C.label(d) + ")", "block differs"});
}

int label_of(const FusionCat& C, const json& j) {
    const int a = C.index_of(j.get<std::string>());
    if (a < 0) throw Error("ParseError", "unknown label " + j.dump());
    return a;
}

} // namespace

ValidationReport check_algebra(const FusionCat& C, const AlgObj& A) {
    ValidationReport rep;
    const Obj& X = A.carrier;
    const Obj XX = tensor_obj(C, X, X);
    if (A.mult.src != XX || A.mult.dst != X || A.unit.src != Obj::unit(C) || A.unit.dst != X) {
        rep.violations.push_back({"shape", A.name, "structure maps have the wrong ends"});
        return rep;
    }
    Mor id = Mor::identity(C, X);
    Mor lhs = compose(A.mult, tensor_mor(C, A.mult, id));
    Mor rhs = compose(A.mult, compose(tensor_mor(C, id, A.mult), associator(C, X, X, X)));
    compare(C, lhs, rhs, "associativity", rep.violations);
    compare(C, compose(A.mult, tensor_mor(C, A.unit, id)), left_unitor(C, X), "left unit", rep.violations);
    compare(C, compose(A.mult, tensor_mor(C, id, A.unit)), right_unitor(C, X), "right unit", rep.violations);
    return rep;
}

AlgObj unit_algebra(const FusionCat& C) {
    AlgObj A;
    A.name = "unit";
    A.carrier = Obj::unit(C);
    A.mult = left_unitor(C, A.carrier);
    A.unit = Mor::identity(C, A.carrier);
    return A;
}

AlgObj algebra_from_json(const FusionCat& C, const json& j, const std::string& name) {
    for (const auto& [k, v] : j.items())
        if (k != "carrier" && k != "mult" && k != "unit" && k != "comment")
            throw Error("ParseError", "algebra " + name + ": unknown key " + k);
    AlgObj A;
    A.name = name;
    A.carrier = Obj::zero(C);
    for (const auto& [lab, m] : j.at("carrier").items()) A.carrier.m[label_of(C, json(lab))] = m.get<int>();
    TensorLayout L(C, A.carrier, A.carrier);
    A.mult = Mor::zero(C, L.obj(), A.carrier);
    for (const auto& e : j.at("mult")) {
        const int d = label_of(C, e.at("d"));
        const auto& c = e.at("col");
        const int a = label_of(C, c.at(0)), b = label_of(C, c.at(2));
        const int i = c.at(1), jj = c.at(3), mu = c.at(4);
        const int row = e.at("row");
        if (i >= A.carrier[a] || jj >= A.carrier[b] || mu >= C.N(a, b, d) || row >= A.carrier[d])
            throw Error("ParseError", "algebra " + name + ": index out of range");
        A.mult.blocks[d](row, L.position(d, a, i, b, jj, mu)) = scalar_from_json(e.at("value"), C.field());
    }
    A.unit = Mor::zero(C, Obj::unit(C), A.carrier);
    for (const auto& e : j.at("unit")) {
        const int d = label_of(C, e.at("d"));
        const int row = e.at("row");
        if (!C.is_unit(d) || row >= A.carrier[d]) throw Error("ParseError", "algebra " + name + ": bad unit entry");
        A.unit.blocks[d](row, 0) = scalar_from_json(e.at("value"), C.field());
    }
    return A;
}

json algebra_to_json(const FusionCat& C, const AlgObj& A) {
    json j;
    json car = json::object();
    for (int a = 0; a < C.rank(); ++a)
        if (A.carrier[a] > 0) car[C.label(a)] = A.carrier[a];
    j["carrier"] = car;
    TensorLayout L(C, A.carrier, A.carrier);
    json mult = json::array();
    for (int d = 0; d < C.rank(); ++d) {
        const auto& basis = L.basis(d);
        for (int r = 0; r < A.mult.blocks[d].rows(); ++r)
            for (size_t p = 0; p < basis.size(); ++p) {
                const Elem& v = A.mult.blocks[d](r, static_cast<int>(p));
                if (v.is_zero()) continue;
                const auto& t = basis[p];
                mult.push_back({{"d", C.label(d)},
                                {"row", r},
                                {"col", {C.label(t.a), t.i, C.label(t.b), t.j, t.mu}},
                                {"value", scalar_to_json(v)}});
            }
    }
    j["mult"] = mult;
    json unit = json::array();
    for (int d : C.units())
        for (int r = 0; r < A.unit.blocks[d].rows(); ++r)
            if (!A.unit.blocks[d](r, 0).is_zero())
                unit.push_back({{"d", C.label(d)}, {"row", r}, {"value", scalar_to_json(A.unit.blocks[d](r, 0))}});
    j["unit"] = unit;
    return j;
}

Obj box_obj(const FusionCat& C1, const FusionCat& C2, const Obj& x, const Obj& y) {
    const int m = C2.rank();
    Obj r(std::vector<int>(static_cast<size_t>(C1.rank()) * m, 0));
    for (int a = 0; a < C1.rank(); ++a)
        for (int b = 0; b < m; ++b) r.m[pair_label(a, b, m)] = x[a] * y[b];
    return r;
}

Mor box_mor(const FusionCat& C1, const FusionCat& C2, const FusionCat& P, const Mor& f, const Mor& g) {
    const int m = C2.rank();
    Mor r = Mor::zero(P, box_obj(C1, C2, f.src, g.src), box_obj(C1, C2, f.dst, g.dst));
    for (int a = 0; a < C1.rank(); ++a)
        for (int b = 0; b < m; ++b) {
            const int p = pair_label(a, b, m);
            if (r.blocks[p].rows() && r.blocks[p].cols()) r.blocks[p] = Mat::kron(f.blocks[a], g.blocks[b]);
        }
    return r;
}

AlgObj box_algebra(const FusionCat& C1, const FusionCat& C2, const FusionCat& P, const AlgObj& A, const AlgObj& B) {
    const int m = C2.rank();
    AlgObj R;
    R.name = A.name + "*" + B.name;
    R.carrier = box_obj(C1, C2, A.carrier, B.carrier);
    TensorLayout LP(P, R.carrier, R.carrier), LA(C1, A.carrier, A.carrier), LB(C2, B.carrier, B.carrier);
    R.mult = Mor::zero(P, LP.obj(), R.carrier);
    for (int d = 0; d < P.rank(); ++d) {
        const int d1 = d / m, d2 = d % m;
        const auto& basis = LP.basis(d);
        for (size_t p = 0; p < basis.size(); ++p) {
            const auto& t = basis[p];
            const int a1 = t.a / m, a2 = t.a % m, b1 = t.b / m, b2 = t.b % m;
            const int i1 = t.i / B.carrier[a2], i2 = t.i % B.carrier[a2];
            const int j1 = t.j / B.carrier[b2], j2 = t.j % B.carrier[b2];
            const int n2 = C2.N(a2, b2, d2);
            const int c1 = LA.position(d1, a1, i1, b1, j1, t.mu / n2);
            const int c2 = LB.position(d2, a2, i2, b2, j2, t.mu % n2);
            for (int r1 = 0; r1 < A.carrier[d1]; ++r1) {
                const Elem& x = A.mult.blocks[d1](r1, c1);
                if (x.is_zero()) continue;
                for (int r2 = 0; r2 < B.carrier[d2]; ++r2) {
                    const Elem& y = B.mult.blocks[d2](r2, c2);
                    if (!y.is_zero()) R.mult.blocks[d](r1 * B.carrier[d2] + r2, static_cast<int>(p)) = x * y;
                }
            }
        }
    }
    R.unit = box_mor(C1, C2, P, A.unit, B.unit);
    return R;
}

} // namespace mfus
