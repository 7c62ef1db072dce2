#include "polypush/json_io.hpp"
#include "polypush/svg.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace polypush;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Polyhedral replacement of closed sets in simplicial complexes";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<validation_error>(m, "ValidationError");
    py::register_exception<numeric_error>(m, "NumericError");

    py::enum_<Incidence>(m, "Incidence")
        .value("faces", Incidence::faces)
        .value("proper_faces", Incidence::proper_faces)
        .value("star", Incidence::star)
        .value("closed_star", Incidence::closed_star)
        .value("link", Incidence::link);

    py::class_<Simplex>(m, "Simplex")
        .def_readonly("vertices", &Simplex::vertices)
        .def_readonly("barycenter", &Simplex::barycenter)
        .def_readonly("diameter", &Simplex::diameter)
        .def_readonly("radius", &Simplex::radius)
        .def_readonly("thickness", &Simplex::thickness)
        .def_property_readonly("dim", &Simplex::dim);

    py::class_<BarycentricCoords>(m, "BarycentricCoords")
        .def_readonly("carrier", &BarycentricCoords::carrier)
        .def_readonly("weights", &BarycentricCoords::weights);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_static(
            "build",
            [](std::vector<Vec> verts, const std::vector<std::vector<int>>& simps,
               const std::vector<int>& q) {
                return SimplicialComplex::build(std::move(verts), simps, q);
            },
            py::arg("vertices"), py::arg("simplices"), py::arg("Q") = std::vector<int>{})
        .def_static("from_json", [](const std::string& text) {
            return complex_from_json(text).complex;
        })
        .def("to_json", &complex_to_json)
        .def_property_readonly("num_vertices", &SimplicialComplex::num_vertices)
        .def_property_readonly("num_simplices", &SimplicialComplex::num_simplices)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def_property_readonly("q_dim", &SimplicialComplex::q_dim)
        .def("vertex", &SimplicialComplex::vertex)
        .def("simplex", &SimplicialComplex::simplex, py::return_value_policy::copy)
        .def("in_q", &SimplicialComplex::in_q)
        .def("find", &SimplicialComplex::find)
        .def("relation", &SimplicialComplex::relation)
        .def("opposite_face", &SimplicialComplex::opposite_face)
        .def("barycentric", &SimplicialComplex::barycentric)
        .def("validate",
             [](const SimplicialComplex& cx) {
                 auto rep = cx.validate();
                 std::vector<std::pair<std::string, std::string>> issues;
                 for (const auto& i : rep.issues) issues.emplace_back(i.kind, i.detail);
                 return issues;
             })
        .def("ray_boundary", [](const SimplicialComplex& cx, int sigma, const Vec& z,
                                const Vec& dir) {
            auto hit = cx.ray_boundary(sigma, z, dir);
            return py::make_tuple(hit.t0, hit.point, hit.hit_face);
        });

    py::class_<Sample>(m, "Sample")
        .def(py::init([](Vec point, int carrier, double weight) {
                 Sample s;
                 s.point = std::move(point);
                 s.carrier = carrier;
                 s.weight = weight;
                 return s;
             }),
             py::arg("point"), py::arg("carrier"), py::arg("weight") = 1.0)
        .def_readwrite("point", &Sample::point)
        .def_readwrite("carrier", &Sample::carrier)
        .def_readwrite("weight", &Sample::weight);

    py::class_<SetModel>(m, "SetModel")
        .def(py::init<>())
        .def_readwrite("a", &SetModel::a)
        .def_readwrite("samples", &SetModel::samples)
        .def_property_readonly("full",
                               [](const SetModel& sm) {
                                   return std::vector<int>(sm.full.begin(), sm.full.end());
                               })
        .def("flag_full", &SetModel::flag_full)
        .def("validate", &SetModel::validate)
        .def("measure_q", &SetModel::measure_q)
        .def_static("from_json", &set_model_from_json)
        .def("to_json", &set_model_to_json);

    py::class_<PushRecord>(m, "PushRecord")
        .def_readonly("sigma", &PushRecord::sigma)
        .def_readonly("z0", &PushRecord::z0)
        .def_readonly("mass_in", &PushRecord::mass_in)
        .def_readonly("mass_out", &PushRecord::mass_out)
        .def_readonly("magnification_empirical", &PushRecord::magnification_empirical)
        .def_readonly("magnification_bound", &PushRecord::magnification_bound)
        .def_readonly("phi_used", &PushRecord::phi_used);

    py::class_<TransportMap>(m, "TransportMap")
        .def_readonly("records", &TransportMap::records)
        .def("to_json", &transport_to_json);

    py::class_<RunStats>(m, "RunStats")
        .def_readonly("pushes", &RunStats::pushes)
        .def_readonly("per_push_magnification", &RunStats::per_push_magnification)
        .def_readonly("initial_measure", &RunStats::initial_measure)
        .def_readonly("final_measure", &RunStats::final_measure);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("s_tilde", &RunResult::s_tilde)
        .def_readonly("transport", &RunResult::transport)
        .def_readonly("stats", &RunResult::stats);

    py::class_<NearResult>(m, "NearResult")
        .def_readonly("refined", &NearResult::refined)
        .def_readonly("s_tilde", &NearResult::s_tilde)
        .def_readonly("transport", &NearResult::transport)
        .def_readonly("stats", &NearResult::stats);

    py::class_<SubdivisionResult>(m, "SubdivisionResult")
        .def_readonly("complex", &SubdivisionResult::complex)
        .def_readonly("parent", &SubdivisionResult::parent)
        .def_readonly("t0", &SubdivisionResult::t0)
        .def_readonly("rounds", &SubdivisionResult::rounds);

    py::class_<MeasureEstimate>(m, "MeasureEstimate")
        .def_readonly("s", &MeasureEstimate::s)
        .def_readonly("value", &MeasureEstimate::value)
        .def_readonly("delta_ladder", &MeasureEstimate::delta_ladder)
        .def_readonly("ladder_values", &MeasureEstimate::ladder_values)
        .def_readonly("method", &MeasureEstimate::method);

    py::class_<ConstantsBundle>(m, "ConstantsBundle")
        .def_readonly("a", &ConstantsBundle::a)
        .def_readonly("q", &ConstantsBundle::q)
        .def_readonly("t_min", &ConstantsBundle::t_min)
        .def_readonly("t_min_defined", &ConstantsBundle::t_min_defined)
        .def_readonly("gamma_star", &ConstantsBundle::gamma_star)
        .def_readonly("phi", &ConstantsBundle::phi)
        .def_readonly("psi", &ConstantsBundle::psi)
        .def_readonly("K1", &ConstantsBundle::K1)
        .def_readonly("K2", &ConstantsBundle::K2)
        .def_readonly("K", &ConstantsBundle::K);

    py::class_<ConeModel>(m, "ConeModel")
        .def_readonly("sigma", &ConeModel::sigma)
        .def_readonly("apex", &ConeModel::apex)
        .def_readonly("anchors", &ConeModel::anchors)
        .def_readonly("images", &ConeModel::images)
        .def_readonly("image_carriers", &ConeModel::image_carriers)
        .def("contains", &ConeModel::contains)
        .def("distance_to", &ConeModel::distance_to);

    py::class_<RetractChain>(m, "RetractChain")
        .def_property_readonly("stages", &RetractChain::stages)
        .def_property_readonly("levels",
                               [](const RetractChain& c) {
                                   std::vector<std::vector<std::pair<Vec, Vec>>> out;
                                   for (const auto& lvl : c.levels) {
                                       std::vector<std::pair<Vec, Vec>> segs;
                                       for (const auto& s : lvl) segs.emplace_back(s.a, s.b);
                                       out.push_back(std::move(segs));
                                   }
                                   return out;
                               })
        .def_readonly("terminal_points", &RetractChain::terminal_points)
        .def_readonly("terminal_full", &RetractChain::terminal_full)
        .def("h", &RetractChain::h)
        .def("in_E", &RetractChain::in_E)
        .def("F", &RetractChain::F);

    m.def("subdivide", &subdivide, py::arg("complex"), py::arg("eps"));
    m.def("run", &run, py::arg("complex"), py::arg("set_model"), py::arg("a"), py::arg("seed") = 0,
          py::arg("gamma") = std::nullopt);
    m.def("detect_partials", [](const SimplicialComplex& cx, const SetModel& sm) {
        auto p = detect_partials(cx, sm);
        return py::make_tuple(p.per_dim, p.rank.counts);
    });
    m.def("push",
          [](const SimplicialComplex& cx, const SetModel& sm, int sigma, const Vec& z) {
              auto res = push(cx, sm, sigma, z);
              return py::make_tuple(res.after, res.record);
          },
          py::arg("complex"), py::arg("set_model"), py::arg("sigma"), py::arg("z"));
    m.def("b_and_hbar",
          [](const SimplicialComplex& cx, int sigma, const Vec& z, const Vec& y) {
              auto bh = b_and_hbar(cx, sigma, z, y);
              return py::make_tuple(bh.b, bh.hbar, bh.hit_face);
          });
    m.def("h_to_face",
          [](const SimplicialComplex& cx, int sigma, int tau, const Vec& z, const Vec& y)
              -> std::optional<Vec> { return h_to_face(cx, sigma, tau, z, y); });
    m.def("lambda_eig", &lambda_eig);
    m.def("cone_build", &cone_build);
    m.def("s_map", &s_map);
    m.def("s_hat_inverse", &s_hat_inverse);
    m.def("g_map", &g_map);
    m.def("sigma_gamma", &sigma_gamma);
    m.def("expand_simplex", &expand_simplex);
    m.def("magnification_bound",
          [](const SimplicialComplex& cx, int sigma, int tau, const Vec& z,
             const std::vector<std::pair<Vec, double>>& A, double a) {
              auto mb = magnification_bound(cx, sigma, tau, z, A, a);
              return py::make_tuple(mb.bound, mb.empirical);
          });
    m.def("select_z0",
          [](const SimplicialComplex& cx, int sigma, const SetModel& sm, double a,
             std::uint64_t seed, std::optional<double> phi, std::optional<double> gamma) {
              auto r = select_z0(cx, sigma, sm, a, seed, phi, gamma);
              return py::make_tuple(r.z0, r.draws, r.accepted_index, r.phi, r.gamma);
          },
          py::arg("complex"), py::arg("sigma"), py::arg("set_model"), py::arg("a"),
          py::arg("seed") = 0, py::arg("phi") = std::nullopt, py::arg("gamma") = std::nullopt);
    m.def("retract_chain", &retract_chain, py::arg("complex"), py::arg("transport"),
          py::arg("set_model"));
    m.def("approximate_near", &approximate_near, py::arg("complex"), py::arg("set_model"),
          py::arg("a"), py::arg("eps"), py::arg("seed") = 0);
    m.def("transport_eval", &transport_eval);
    m.def("k_fn", &k_fn);
    m.def("hausdorff_points", &hausdorff_points, py::arg("points"), py::arg("s"),
          py::arg("ladder") = std::vector<double>{});
    m.def("hausdorff_setmodel", &hausdorff_setmodel);
    m.def("K_constants", &K_constants);
    m.def("filtration_count", &filtration_count);
    m.def("phi_constants",
          [](double a, int r, double t, std::optional<double> gamma) {
              auto pc = phi_constants(a, r, t, gamma);
              return py::make_tuple(pc.phi_tilde, pc.phi, pc.gamma_star);
          },
          py::arg("a"), py::arg("r"), py::arg("t"), py::arg("gamma") = std::nullopt);
    m.def("render_svg", [](const SimplicialComplex& cx, const SetModel* sm,
                           std::optional<std::pair<int, int>> project) {
              RenderOptions ro;
              ro.project = project;
              return render_svg(cx, sm, nullptr, ro);
          },
          py::arg("complex"), py::arg("set_model") = nullptr, py::arg("project") = std::nullopt);
}
