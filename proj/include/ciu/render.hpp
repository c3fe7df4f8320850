/** @file render.hpp
 *  @brief Human-facing renderings: templated text and SVG/JSON bar plots.
 *
 *  Bar plots draw, per concept, a transparent outer bar of length CI and a
 *  solid inner bar of length CI*CU (how favorable the current values are
 *  within the attainable range). Influence and Shapley documents render as
 *  signed bars around a zero line instead. Every renderer is a pure
 *  function of the document, with fixed-precision coordinates, so output
 *  bytes are stable.
 */

#ifndef CIU_RENDER_HPP
#define CIU_RENDER_HPP

#include <string>

#include "ciu/explanation.hpp"

namespace ciu {

/// Placeholders available in the per-concept line template: {name} {ci}
/// {ci_pct} {cu} {cu_pct} {influence} {favor} {phi} {stderr}.
struct TextTemplate {
    std::string concept_line;

    static TextTemplate standard();
    static TextTemplate load(const std::string& path);
};

std::string render_text(const ExplanationDocument& doc,
                        const TextTemplate& tmpl = TextTemplate::standard());

struct BarPlot {
    std::string svg;
    std::string data_json; // the same numbers, machine readable
};

BarPlot render_barplot(const ExplanationDocument& doc);

} // namespace ciu

#endif // CIU_RENDER_HPP
