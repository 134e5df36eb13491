#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "memlight/experiment.hpp"
#include "memlight/suffix_array.hpp"
#include "memlight/text_index.hpp"

namespace py = pybind11;
using namespace memlight;

namespace {

py::dict mem_to_dict(const MemRecord& r) {
    py::dict d;
    d["start"] = r.start;
    d["length"] = r.length;
    if (r.bwt_interval) d["interval"] = py::make_tuple(r.bwt_interval->lo, r.bwt_interval->hi);
    if (r.occurrences) d["occurrences"] = *r.occurrences;
    return d;
}

py::dict stats_to_dict(const QueryStats& s) {
    py::dict d;
    d["backward_steps"] = s.backward_steps;
    d["lcp_queries"] = s.lcp_queries;
    d["lcs_queries"] = s.lcs_queries;
    d["loop_iterations"] = s.loop_iterations;
    d["hash_comparisons"] = s.hash_comparisons;
    return d;
}

py::dict result_to_dict(const FinderResult& r) {
    py::list mems;
    for (const auto& m : r.mems) mems.append(mem_to_dict(m));
    py::dict d;
    d["mems"] = mems;
    d["stats"] = stats_to_dict(r.stats);
    return d;
}

Backend parse_backend(const std::string& s) {
    if (s == "fm") return Backend::fm;
    if (s == "lce") return Backend::lce;
    throw InputError("backend must be 'fm' or 'lce'");
}

LceMode parse_lce(const std::string& s) {
    if (s == "fingerprint") return LceMode::fingerprint;
    if (s == "naive") return LceMode::naive;
    throw InputError("lce mode must be 'fingerprint' or 'naive'");
}

Mutation parse_mutation(const std::string& s) {
    if (s == "flip") return Mutation::flip;
    if (s == "replace") return Mutation::replace_uniform;
    throw InputError("mutation must be 'flip' or 'replace'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Maximal exact matches above a length threshold";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<IndexFormatError>(m, "IndexFormatError", PyExc_ValueError);

    py::class_<TextIndex>(m, "TextIndex")
        .def(py::init([](py::bytes text, std::size_t sample_rate) {
                 return std::make_unique<TextIndex>(make_text(std::string(text)), sample_rate);
             }),
             py::arg("text"), py::arg("sample_rate") = kDefaultSampleRate)
        .def_static(
            "load",
            [](const std::filesystem::path& prefix) {
                const auto fwd = TextIndex::forward_path(prefix), rev = TextIndex::reverse_path(prefix);
                return std::make_unique<TextIndex>(FmIndex::load(fwd), FmIndex::load(rev));
            },
            py::arg("prefix"))
        .def("save", &TextIndex::save, py::arg("prefix"))
        .def_property_readonly("size", [](const TextIndex& t) { return t.text().size(); })
        .def_property_readonly("sigma", [](const TextIndex& t) { return t.text().alphabet().size(); })
        .def_property_readonly("text", [](const TextIndex& t) { return py::bytes(t.text().to_string()); })
        .def(
            "find_mems",
            [](const TextIndex& t, py::bytes pattern, std::size_t min_length, const std::string& backend,
               const std::string& lce, bool all, bool locate, std::uint64_t seed) {
                QueryOptions o;
                o.min_length = min_length;
                o.backend = parse_backend(backend);
                o.lce_mode = parse_lce(lce);
                o.all_mems = all;
                o.locate = locate;
                o.seed = seed;
                const std::string p(pattern);
                FinderResult r;
                {
                    py::gil_scoped_release release;
                    r = t.find_mems(p, o);
                }
                return result_to_dict(r);
            },
            py::arg("pattern"), py::arg("min_length") = 1, py::arg("backend") = "fm",
            py::arg("lce") = "fingerprint", py::arg("all") = false, py::arg("locate") = false,
            py::arg("seed") = kDefaultFingerprintSeed)
        .def(
            "longest_common_substring",
            [](const TextIndex& t, py::bytes pattern, bool locate) {
                const std::string p(pattern);
                FinderResult r;
                {
                    py::gil_scoped_release release;
                    r = t.longest_common_substring(p, locate);
                }
                return result_to_dict(r);
            },
            py::arg("pattern"), py::arg("locate") = false);

    m.def(
        "match_pointers",
        [](py::bytes text, py::bytes pattern) {
            const Text t = make_text(std::string(text));
            const Pattern p = Pattern::encode(std::string(pattern), t.alphabet());
            const auto mp = compute_match_pointers(p, t, build_suffix_structures(t),
                                                   build_suffix_structures(reversed(t)));
            return py::make_tuple(std::vector<std::size_t>(mp.mf.begin(), mp.mf.end()),
                                  std::vector<std::size_t>(mp.mb.begin(), mp.mb.end()));
        },
        py::arg("text"), py::arg("pattern"),
        "0-based (mf, mb) pointers; ties go to the smallest text position.");

    m.def(
        "brute_force_mems",
        [](py::bytes text, py::bytes pattern, std::size_t min_length) {
            const Text t = make_text(std::string(text));
            const Pattern p = Pattern::encode(std::string(pattern), t.alphabet());
            py::list out;
            for (const auto& r : brute_force_mems(p, t, build_suffix_structures(t), min_length)) {
                out.append(mem_to_dict(r));
            }
            return out;
        },
        py::arg("text"), py::arg("pattern"), py::arg("min_length") = 1);

    m.def(
        "run_experiment",
        [](std::size_t n, std::size_t m_, std::size_t sigma, const std::string& mutation, double rate,
           std::size_t min_length, std::uint64_t seed, bool cyclic) {
            ExperimentSpec spec;
            spec.n = n;
            spec.m = m_;
            spec.sigma = sigma;
            spec.mutation = parse_mutation(mutation);
            spec.rate = rate;
            spec.min_length = min_length;
            spec.seed = seed;
            spec.cyclic = cyclic;
            ComparisonReport rep;
            {
                py::gil_scoped_release release;
                rep = run_comparison(spec);
            }
            py::dict d;
            d["full"] = stats_to_dict(rep.full);
            d["thresholded"] = stats_to_dict(rep.thresholded);
            d["lcs"] = stats_to_dict(rep.lcs);
            d["step_ratio"] = rep.step_ratio();
            d["mutations"] = rep.mutations;
            d["mems_all"] = rep.all_mems.size();
            d["mems_thresholded"] = rep.long_mems.size();
            d["longest"] = rep.longest ? py::object(mem_to_dict(*rep.longest)) : py::none();
            py::list hist;
            for (const auto& row : rep.histogram) {
                hist.append(py::make_tuple(row.length, row.count, row.unique, row.correct));
            }
            d["histogram"] = hist;
            d["tsv"] = rep.to_tsv();
            return d;
        },
        py::arg("n") = 1'000'000, py::arg("m") = 10'000, py::arg("sigma") = 2, py::arg("mutation") = "flip",
        py::arg("rate") = 0.1, py::arg("min_length") = 40, py::arg("seed") = 42, py::arg("cyclic") = true);

    m.attr("__version__") = kToolVersion;
}
