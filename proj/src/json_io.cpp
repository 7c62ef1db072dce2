#include "polypush/json_io.hpp"

#include "polypush/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace polypush {

using nlohmann::json;

namespace {

Vec to_vec(const json& arr) {
    Vec v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) v[i] = arr[i].get<double>();
    return v;
}

json from_vec(const Vec& v) {
    json arr = json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(e.what());
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

LoadedComplex complex_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("vertices") || !j.contains("simplices"))
        throw parse_error("complex JSON needs 'vertices' and 'simplices'");
    std::vector<Vec> verts;
    int amb = -1;
    for (const auto& v : j["vertices"]) {
        Vec p = to_vec(v);
        if (amb < 0) amb = static_cast<int>(p.size());
        if (p.size() != amb) throw parse_error("inconsistent vertex dimension");
        verts.push_back(std::move(p));
    }
    std::vector<std::vector<int>> simps;
    for (const auto& s : j["simplices"]) simps.push_back(s.get<std::vector<int>>());
    std::vector<int> q;
    if (j.contains("Q")) q = j["Q"].get<std::vector<int>>();
    LoadedComplex out;
    out.complex = SimplicialComplex::build(std::move(verts), simps, q, &out.report);
    auto rep = out.complex.validate();
    if (!rep.ok()) {
        std::string msg = "loaded complex invalid:";
        for (const auto& i : rep.issues) msg += " [" + i.kind + " " + i.detail + "]";
        throw validation_error(msg);
    }
    return out;
}

LoadedComplex complex_from_file(const std::string& path) {
    return complex_from_json(read_file(path));
}

std::string complex_to_json(const SimplicialComplex& cx) {
    json j;
    j["vertices"] = json::array();
    for (int v = 0; v < cx.num_vertices(); ++v) j["vertices"].push_back(from_vec(cx.vertex(v)));
    j["simplices"] = json::array();
    json q = json::array();
    for (int s = 0; s < cx.num_simplices(); ++s) {
        if (cx.in_q(s)) q.push_back(s);
        j["simplices"].push_back(cx.simplex(s).vertices);
    }
    j["Q"] = q;
    return j.dump(2) + "\n";
}

SetModel set_model_from_json(const std::string& text, const SimplicialComplex& cx) {
    json j = parse(text);
    SetModel sm;
    sm.a = j.value("a", 0.0);
    if (j.contains("samples")) {
        for (const auto& s : j["samples"]) {
            Sample smp;
            smp.point = to_vec(s.at("point"));
            smp.carrier = s.at("carrier").get<int>();
            smp.weight = s.value("weight", 1.0);
            sm.samples.push_back(std::move(smp));
        }
    }
    if (j.contains("full"))
        for (const auto& f : j["full"]) sm.full.insert(f.get<int>());
    sm.validate(cx);
    return sm;
}

SetModel set_model_from_file(const std::string& path, const SimplicialComplex& cx) {
    return set_model_from_json(read_file(path), cx);
}

std::string set_model_to_json(const SetModel& sm) {
    json j;
    j["a"] = sm.a;
    j["samples"] = json::array();
    for (const Sample& s : sm.samples)
        j["samples"].push_back(
            {{"point", from_vec(s.point)}, {"carrier", s.carrier}, {"weight", s.weight}});
    j["full"] = json::array();
    for (int f : sm.full) j["full"].push_back(f);
    return j.dump(2) + "\n";
}

std::string transport_to_json(const TransportMap& G) {
    json recs = json::array();
    for (const PushRecord& r : G.records) {
        json jr;
        jr["sigma"] = r.sigma;
        jr["z0"] = from_vec(r.z0);
        json imgs = json::array();
        for (const Vec& img : r.cone.images) imgs.push_back(from_vec(img));
        jr["cone_images"] = imgs;
        jr["cone_image_carriers"] = r.cone.image_carriers;
        jr["cone_sample_ids"] = r.cone.sample_ids;
        jr["rank_before"] = r.rank_before.counts;
        jr["rank_after"] = r.rank_after.counts;
        jr["mass_in"] = r.mass_in;
        jr["mass_out"] = r.mass_out;
        jr["magnification_empirical"] = r.magnification_empirical;
        jr["magnification_bound"] = r.magnification_bound;
        jr["phi_used"] = r.phi_used;
        recs.push_back(std::move(jr));
    }
    json j;
    j["records"] = recs;
    return j.dump(2) + "\n";
}

std::string constants_to_json(const ConstantsBundle& kc) {
    json j;
    j["a"] = kc.a;
    j["q"] = kc.q;
    j["t_min"] = kc.t_min_defined ? json(kc.t_min) : json();
    j["gamma_star"] = std::isfinite(kc.gamma_star) ? json(kc.gamma_star) : json();
    j["phi"] = std::isfinite(kc.phi) ? json(kc.phi) : json();
    j["psi"] = kc.psi;
    j["K1"] = kc.K1;
    j["K2"] = kc.K2;
    j["K"] = kc.K;
    return j.dump(2) + "\n";
}

std::string measure_to_json(const MeasureEstimate& est) {
    json j;
    j["s"] = est.s;
    j["value"] = est.value;
    j["method"] = est.method;
    j["delta_ladder"] = est.delta_ladder;
    j["ladder_values"] = est.ladder_values;
    return j.dump(2) + "\n";
}

std::string validation_to_json(const ValidationReport& rep, const BuildReport& build) {
    json j;
    j["valid"] = rep.ok();
    json issues = json::array();
    for (const auto& i : rep.issues) issues.push_back({{"kind", i.kind}, {"detail", i.detail}});
    j["issues"] = issues;
    json added = json::array();
    for (const auto& f : build.added_faces) added.push_back(f);
    j["auto_closed_faces"] = added;
    j["q_was_face_closed"] = build.q_closed_under_faces;
    return j.dump(2) + "\n";
}

std::string run_stats_to_json(const RunStats& stats) {
    json j;
    j["pushes"] = stats.pushes;
    j["per_push_magnification"] = stats.per_push_magnification;
    j["initial_measure"] = stats.initial_measure;
    j["final_measure"] = stats.final_measure;
    return j.dump(2) + "\n";
}

std::string retract_to_json(const RetractChain& chain) {
    json j;
    json levels = json::array();
    for (const auto& lvl : chain.levels) {
        json segs = json::array();
        for (const auto& seg : lvl)
            segs.push_back({{"from", from_vec(seg.a)}, {"to", from_vec(seg.b)}});
        levels.push_back(std::move(segs));
    }
    j["levels"] = levels;
    json frames = json::array();
    for (int i = 0; i < chain.stages(); ++i) {
        json fr = json::array();
        for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            json pts = json::array();
            for (const auto& seg : chain.levels[i]) pts.push_back(from_vec(chain.F(i, seg.a, t)));
            fr.push_back({{"t", t}, {"points", pts}});
        }
        frames.push_back(std::move(fr));
    }
    j["frames"] = frames;
    json term = json::array();
    for (const Vec& p : chain.terminal_points) term.push_back(from_vec(p));
    j["terminal_points"] = term;
    j["terminal_full"] = chain.terminal_full;
    return j.dump(2) + "\n";
}

}  // namespace polypush
