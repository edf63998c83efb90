#include "fqmzv/json_io.hpp"

#include <stdexcept>

namespace fqmzv {

using nlohmann::json;

json field_to_json(const Fq& f) {
    json mod = json::array();
    for (fq_elem c : f.modulus()) mod.push_back(int(c));
    return json{{"p", f.p()}, {"ext_degree", f.ext_degree()}, {"modulus", mod}};
}

const Fq& field_from_json(const json& j) {
    if (j.contains("q") && !j.contains("p")) return Fq::get_q(j.at("q").get<int>());
    std::vector<int> mod;
    if (j.contains("modulus"))
        for (const auto& c : j.at("modulus")) mod.push_back(c.get<int>());
    return Fq::get(j.at("p").get<int>(), j.value("ext_degree", 1), mod);
}

json poly_to_json(const Poly& a) {
    json coeffs = json::array();
    if (a.is_zero()) return coeffs;
    const Fq& f = a.field();
    for (fq_elem c : a.coeffs()) {
        json vec = json::array();
        for (int x : f.coords(c)) vec.push_back(x);
        coeffs.push_back(vec);
    }
    return coeffs;
}

Poly poly_from_json(const Fq& f, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<fq_elem> c;
    for (const auto& vec : j) {
        if (vec.is_number()) {  // accept plain element indices as a shorthand
            long long ix = vec.get<long long>();
            if (ix < 0 || ix >= f.q()) throw std::invalid_argument("coefficient index out of range");
            c.push_back(fq_elem(ix));
            continue;
        }
        std::vector<int> coords;
        for (const auto& x : vec) coords.push_back(x.get<int>());
        c.push_back(f.from_coords(coords));
    }
    return Poly(f, std::move(c));
}

json vadic_to_json(const VAdic& x) {
    return json{{"v", poly_to_json(x.place().v())},
                {"level", x.level()},
                {"value", poly_to_json(x.value())}};
}

VAdic vadic_from_json(const Fq& f, const json& j) {
    Poly v = poly_from_json(f, j.at("v"));
    const VPlace& place = VPlace::get(v);
    return VAdic(place, j.at("level").get<int>(), poly_from_json(f, j.at("value")));
}

json laurent_to_json(const Laurent& s) {
    json coeffs = json::array();
    const Fq& f = s.field();
    for (int j = s.ord(); j < s.precision(); ++j) {
        json vec = json::array();
        for (int x : f.coords(s.coeff(j))) vec.push_back(x);
        coeffs.push_back(vec);
    }
    return json{{"lead_order", s.ord()}, {"precision", s.precision()}, {"coeffs", coeffs}};
}

}  // namespace fqmzv
