#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "imc/formula.hpp"
#include "imc/kripke.hpp"

namespace imc {

// Whether instance truth tracks the source property or its negation.
enum class Polarity { Same, Complement };

std::string_view to_string(Polarity p);
std::optional<Polarity> polarity_from_string(std::string_view text);

// The unit every reduction emits and every checker consumes: a formula, a
// model, a distinguished state, the logic class the model must satisfy, and
// the polarity of the encoded answer.
struct McInstance {
    std::shared_ptr<FormulaArena> arena;
    std::variant<IntF, ModalF> formula;
    KripkeModel model;
    std::string state;
    LogicClass logic = LogicClass::K;
    Polarity polarity = Polarity::Same;

    bool is_modal() const { return !is_intuitionistic(logic); }
    IntF int_formula() const;     // InputError when the instance is modal
    ModalF modal_formula() const; // InputError when the instance is intuitionistic
};

// Internal consistency: arena present, state exists, formula side matches the
// logic side. Throws InputError.
void validate_shape(const McInstance& inst);

} // namespace imc
