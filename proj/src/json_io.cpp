#include "arcmot/json_io.hpp"

namespace arcmot {

Json ring_to_json(const PolyRing& ring) {
    Json j;
    j["field"] = ring.field().to_string();
    j["variables"] = ring.vars();
    j["order"] = ring.order() == MonomialOrder::DegRevLex ? "degrevlex" : "lex";
    return j;
}

Json ideal_to_json(const Ideal& ideal) {
    Json j = ring_to_json(*ideal.ring());
    Json gens = Json::array();
    for (const auto& g : ideal.gens()) gens.push_back(g.to_string());
    j["generators"] = gens;
    return j;
}

Json arc_to_json(const ArcPresentation& arc) {
    Json j;
    j["source"] = ideal_to_json(arc.source_ideal);
    j["fat"] = ideal_to_json(arc.fat_ideal);
    j["grid"] = arc.grid;
    Json gens = Json::array();
    for (const auto& g : arc.generators) gens.push_back(g.to_string());
    j["generators"] = gens;
    Json prov;
    prov["basis"] = arc.provenance.basis;
    prov["flat_names"] = arc.provenance.flat_names;
    j["provenance"] = prov;
    return j;
}

Json reduction_to_json(const ReducedPresentation& red) {
    Json j;
    j["killed"] = std::vector<std::string>(red.killed.begin(), red.killed.end());
    j["free"] = red.free_vars;
    Json subs;
    for (const auto& [v, img] : red.substitutions) subs[v] = img.to_string();
    j["substitutions"] = subs;
    Json res = Json::array();
    for (const auto& g : red.residual) res.push_back(g.to_string());
    j["residual"] = res;
    j["certified"] = red.certified();
    j["affine_rank"] = red.affine_rank();
    Json factors = Json::array();
    for (const auto& f : decompose(red).factors) {
        Json fj = Json::array();
        for (const auto& g : f.gens()) fj.push_back(g.to_string());
        factors.push_back(fj);
    }
    j["factors"] = factors;
    return j;
}

Json decomposition_to_json(const Decomposition& dec) {
    Json j;
    j["affine_rank"] = dec.affine_rank;
    Json factors = Json::array();
    for (const auto& f : dec.factors) factors.push_back(ideal_to_json(f));
    j["factors"] = factors;
    return j;
}

Json class_to_json(const MotiveClass& c) {
    Json coeffs;
    for (const auto& [e, v] : c.coeffs()) coeffs[std::to_string(e)] = v.get_str();
    Json j;
    j["L_coeffs"] = coeffs;
    return j;
}

Json series_to_json(const MotiveSeries& s) {
    Json j;
    j["T"] = s.truncation();
    Json coeffs = Json::array();
    for (std::size_t n = 0; n <= s.truncation(); ++n) coeffs.push_back(class_to_json(s.coeff(n)));
    j["coeffs"] = coeffs;
    return j;
}

Json rational_to_json(const MotiveRational& r) {
    Json j;
    Json num = Json::array(), den = Json::array();
    for (const auto& c : r.num) num.push_back(class_to_json(c));
    for (const auto& c : r.den) den.push_back(class_to_json(c));
    j["num"] = num;
    j["den"] = den;
    return j;
}

Json zeta_result_to_json(const ZetaResult& z) {
    Json j;
    j["dim_p"] = z.dim_p;
    j["series"] = series_to_json(z.series);
    Json rows = Json::array();
    for (const auto& d : z.details) {
        Json r;
        r["n"] = d.n;
        r["jet_length"] = d.jet_length;
        r["affine_rank"] = d.affine_rank;
        r["factors"] = d.factor_count;
        r["class"] = d.cls.to_string();
        r["exponent"] = d.exponent;
        r["certified"] = d.certified;
        r["confirmed"] = d.confirmed;
        rows.push_back(r);
    }
    j["coefficients"] = rows;
    return j;
}

Json report_to_json(const SeriesReport& rep) {
    Json j;
    j["computed"] = series_to_json(rep.computed);
    if (rep.closed_form) j["closed_form"] = rational_to_json(*rep.closed_form);
    Json rows = Json::array();
    for (const auto& d : rep.diff) {
        Json r;
        r["n"] = d.n;
        r["computed"] = d.computed.to_string();
        r["expanded"] = d.expanded.to_string();
        r["verdict"] = d.match ? "match" : "mismatch";
        rows.push_back(r);
    }
    j["diff"] = rows;
    j["matches"] = rep.matches;
    if (rep.tail_shift) {
        Json t;
        t["normalization"] =
            rep.tail_shift->normalization == Normalization::Definition ? "definition" : "codim";
        t["L_shift"] = rep.tail_shift->a;
        t["t_shift"] = rep.tail_shift->b;
        j["tail_shift"] = t;
    }
    return j;
}

RingPtr ring_from_json(const Json& j) {
    std::string field_s = j.at("field").get<std::string>();
    CoefficientField field = CoefficientField::rationals();
    if (field_s != "QQ") {
        if (field_s.rfind("GF(", 0) != 0 || field_s.back() != ')')
            throw parse_error("unknown field '" + field_s + "'");
        field = CoefficientField::prime(std::stoul(field_s.substr(3, field_s.size() - 4)));
    }
    MonomialOrder order = MonomialOrder::DegRevLex;
    if (j.contains("order") && j.at("order").get<std::string>() == "lex") order = MonomialOrder::Lex;
    return PolyRing::make(field, j.at("variables").get<std::vector<std::string>>(), order);
}

Ideal ideal_from_json(const Json& j) {
    RingPtr ring = ring_from_json(j);
    std::vector<Polynomial> gens;
    for (const auto& s : j.at("generators")) gens.push_back(parse_polynomial(s.get<std::string>(), ring));
    return Ideal(ring, std::move(gens));
}

MotiveClass class_from_json(const Json& j) {
    MotiveClass c;
    for (const auto& [k, v] : j.at("L_coeffs").items())
        c = c + MotiveClass::L_power(std::stol(k), mpz_class(v.get<std::string>()));
    return c;
}

MotiveRational rational_from_json(const Json& j) {
    MotiveRational r;
    for (const auto& cj : j.at("num")) r.num.push_back(class_from_json(cj));
    for (const auto& cj : j.at("den")) r.den.push_back(class_from_json(cj));
    return r;
}

}  // namespace arcmot
