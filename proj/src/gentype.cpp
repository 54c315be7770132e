#include "vwref/qseries.hpp"

#include "vwref/errors.hpp"
#include "vwref/scenario.hpp"

namespace vw {

QSeries gen_type_series(long P2, int order) {
    if (order < 0) throw OrderTooLow("gen_type_series: negative order");
    if (order > 2)
        throw OrderTooLow("gen_type_series: computed through q^2 only; higher orders need "
                          "more fixed-locus data");
    auto& reg = ScenarioRegistry::instance();
    Bindings binds{{"P2", P2}};
    auto coeff = [&](const std::string& name) {
        return chi_t(build_localize_data(reg.get(name), binds));
    };
    QSeries out(order);
    out.set_coeff(0, coeff("gt_horizontal_n0"));
    if (order >= 1) out.set_coeff(1, coeff("gt_horizontal_n1"));
    if (order >= 2) out.set_coeff(2, coeff("gt_horizontal_n2") + coeff("gt_vertical_n2"));
    return out;
}

} // namespace vw
