#include "imc/instance.hpp"

namespace imc {

std::string_view to_string(Polarity p) {
    return p == Polarity::Same ? "same" : "complement";
}

std::optional<Polarity> polarity_from_string(std::string_view text) {
    if (text == "same") return Polarity::Same;
    if (text == "complement") return Polarity::Complement;
    return std::nullopt;
}

IntF McInstance::int_formula() const {
    if (const IntF* f = std::get_if<IntF>(&formula)) return *f;
    throw InputError("expected an intuitionistic formula for logic " +
                     std::string(to_string(logic)));
}

ModalF McInstance::modal_formula() const {
    if (const ModalF* f = std::get_if<ModalF>(&formula)) return *f;
    throw InputError("expected a modal formula for logic " +
                     std::string(to_string(logic)));
}

void validate_shape(const McInstance& inst) {
    if (!inst.arena) throw InputError("instance has no formula arena");
    const bool modal_formula_side = std::holds_alternative<ModalF>(inst.formula);
    if (is_intuitionistic(inst.logic) == modal_formula_side)
        throw InputError("formula language does not match logic " +
                         std::string(to_string(inst.logic)));
    inst.model.require_index(inst.state);
}

} // namespace imc
