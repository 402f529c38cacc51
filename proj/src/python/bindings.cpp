// Copyright 2026 The skewlens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "skewlens/evaluator.hpp"
#include "skewlens/io.hpp"
#include "skewlens/metrics.hpp"
#include "skewlens/sampler.hpp"
#include "skewlens/synthgen.hpp"

namespace py = pybind11;
using namespace skewlens;

namespace {

// JSON round-trip keeps the binding surface small; callers get plain dicts.
py::object json_to_py(const nlohmann::json& j) {
  py::module_ json_mod = py::module_::import("json");
  return json_mod.attr("loads")(j.dump());
}

Perspective perspective_arg(const std::string& name) { return perspective_from_string(name); }

}  // namespace

PYBIND11_MODULE(_skewlens, m) {
  m.doc() = "Skew metrics and controlled-split curation for binary relational scenes";

  py::register_exception<Error>(m, "SkewlensError");

  py::class_<Dataset>(m, "Dataset")
      .def("__len__", [](const Dataset& d) { return d.size(); })
      .def_property_readonly("concepts",
                             [](const Dataset& d) { return d.concept_vocab.concepts(); })
      .def_property_readonly("visual_roles",
                             [](const Dataset& d) { return d.vis_vocab.positions(); })
      .def_property_readonly("linguistic_roles",
                             [](const Dataset& d) { return d.ling_vocab.positions(); })
      .def("captions", [](const Dataset& d) {
        std::vector<std::string> out;
        for (const auto& scene : d.scenes) out.push_back(render_caption(scene));
        return out;
      });

  m.def("read_dataset", [](const std::string& path) {
    return read_dataset_jsonl(path, RelationLexicon::default_lexicon());
  });
  m.def("write_dataset", &write_dataset_jsonl, py::arg("path"), py::arg("dataset"));

  m.def(
      "skew_report",
      [](const Dataset& d, const std::string& perspective, bool with_coverage,
         bool uniform_weights) {
        const Perspective p = perspective_arg(perspective);
        if (with_coverage && p == Perspective::kVisual) {
          const Universe universe(d.concept_vocab, d.vis_vocab, false);
          return json_to_py(skew_report_to_json(skew_report(d, &universe, p, uniform_weights)));
        }
        return json_to_py(skew_report_to_json(skew_report(d, nullptr, p, uniform_weights)));
      },
      py::arg("dataset"), py::arg("perspective") = "visual", py::arg("with_coverage") = true,
      py::arg("uniform_weights") = false);

  m.def(
      "pmd",
      [](const Dataset& d, const std::string& perspective) {
        return json_to_py(pmd_to_json(pmd(d, perspective_arg(perspective))));
      },
      py::arg("dataset"), py::arg("perspective") = "visual");

  m.def(
      "extract_complete_subsample",
      [](const Dataset& d, const std::string& perspective) {
        return extract_complete_subsample(d, perspective_arg(perspective));
      },
      py::arg("dataset"), py::arg("perspective") = "visual");

  m.def(
      "pattern_split",
      [](int n, const std::string& kind, int block, int quota, int skew, std::uint64_t seed) {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) {
          char buf[16];
          std::snprintf(buf, sizeof(buf), "icon%03d", i);
          names.emplace_back(buf);
        }
        const auto lexicon = RelationLexicon::default_lexicon();
        const Universe universe(ConceptVocabulary(names), lexicon.roles_for_axis(Axis::kTB),
                                false);
        PatternSpec spec;
        spec.kind = pattern_kind_from_string(kind);
        spec.block = block;
        spec.quota = quota;
        spec.skew = skew;
        spec.seed = seed;
        const Mask mask = generate_pattern_mask(universe, spec);
        SplitResult split = split_from_mask(universe, mask, "on top of");
        return py::make_tuple(split.train, split.test,
                              json_to_py(skew_report_to_json(split.achieved)));
      },
      py::arg("n"), py::arg("kind"), py::arg("block") = 0, py::arg("quota") = 0,
      py::arg("skew") = 0, py::arg("seed") = 0);

  m.def(
      "subsample_to_targets",
      [](const Dataset& d, double cpl_r1, double cpl_r2, double blc, double coverage,
         double tolerance, std::uint64_t seed, int max_swaps) {
        TargetSpec targets{cpl_r1, cpl_r2, blc, coverage, tolerance};
        SubsampleResult result = subsample_to_targets(d, targets, seed, max_swaps);
        return py::make_tuple(result.data, json_to_py(skew_report_to_json(result.achieved)),
                              result.within_tolerance);
      },
      py::arg("dataset"), py::arg("cpl_r1"), py::arg("cpl_r2"), py::arg("blc"),
      py::arg("coverage"), py::arg("tolerance") = 0.03, py::arg("seed") = 0,
      py::arg("max_swaps") = 10000);

  m.def(
      "assign_phrasings",
      [](const Dataset& d, double cpl_r1, double cpl_r2, double blc, double tolerance,
         std::uint64_t seed, int max_flips) {
        TargetSpec targets{cpl_r1, cpl_r2, blc, 1.0, tolerance};
        PhrasingResult result =
            assign_phrasings(d, RelationLexicon::default_lexicon(), targets, seed, max_flips);
        return py::make_tuple(result.data, json_to_py(skew_report_to_json(result.achieved)),
                              result.within_tolerance);
      },
      py::arg("dataset"), py::arg("cpl_r1"), py::arg("cpl_r2"), py::arg("blc"),
      py::arg("tolerance") = 0.03, py::arg("seed") = 0, py::arg("max_flips") = 10000);

  m.def(
      "emit_images",
      [](const Dataset& train, const Dataset& test, const std::string& out_dir,
         const std::string& layout, std::uint64_t seed) {
        SplitResult split;
        split.train = train;
        split.test = test;
        const Universe universe(train.concept_vocab, train.vis_vocab, false);
        split.achieved = skew_report(train, &universe, Perspective::kVisual);
        const GlyphAtlas atlas = procedural_glyphs(train.concept_vocab.concepts(), seed);
        const EmitManifest manifest =
            emit_dataset(split, atlas, layout_from_string(layout), out_dir, seed);
        return py::make_tuple(manifest.train_manifest, manifest.test_manifest,
                              manifest.atlas_digest);
      },
      py::arg("train"), py::arg("test"), py::arg("out_dir"), py::arg("layout") = "vertical",
      py::arg("seed") = 0);

  m.def(
      "evaluate_images",
      [](const std::string& generated_manifest, const std::string& truth_manifest, int atlas_n,
         std::uint64_t atlas_seed, const std::string& layout, double blank_threshold) {
        const GlyphAtlas atlas = procedural_glyphs(atlas_n, atlas_seed);
        const EvalReport report = evaluate_images(generated_manifest, truth_manifest, atlas,
                                                  layout_from_string(layout), blank_threshold);
        py::dict errors;
        for (const auto& [key, count] : report.errors) errors[py::str(key)] = count;
        return py::dict(py::arg("total") = report.total,
                        py::arg("both_correct") = report.both_correct,
                        py::arg("accuracy") = report.accuracy(), py::arg("errors") = errors);
      },
      py::arg("generated_manifest"), py::arg("truth_manifest"), py::arg("atlas_n"),
      py::arg("atlas_seed") = 0, py::arg("layout") = "vertical",
      py::arg("blank_threshold") = kDefaultBlankThreshold);

  m.def(
      "accuracy_gap",
      [](const std::string& curves_csv, bool use_sum) {
        return accuracy_gap(read_curves_csv(curves_csv), use_sum);
      },
      py::arg("curves_csv"), py::arg("use_sum") = false);
}
