#pragma once

#include <stdexcept>
#include <string>

namespace bkk {

// Base class for every domain error the engine can raise; `code()` is the
// machine-readable reason emitted by the CLI.
class EngineError : public std::runtime_error {
   public:
    EngineError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

   private:
    std::string code_;
};

#define BKK_DEFINE_ERROR(Name)                                 \
    class Name : public EngineError {                          \
       public:                                                 \
        explicit Name(const std::string& what = #Name)         \
            : EngineError(#Name, what) {}                      \
    }

BKK_DEFINE_ERROR(DimensionMismatch);
BKK_DEFINE_ERROR(NotLattice);
BKK_DEFINE_ERROR(NotFullDim);
BKK_DEFINE_ERROR(NotAFace);
BKK_DEFINE_ERROR(EmptyResult);
BKK_DEFINE_ERROR(SecondValueUndefined);
BKK_DEFINE_ERROR(DegenerateAxis);
BKK_DEFINE_ERROR(DenominatorUndefined);
BKK_DEFINE_ERROR(ContainsOrigin);
BKK_DEFINE_ERROR(UnboundSymbol);
BKK_DEFINE_ERROR(DependentVectors);
BKK_DEFINE_ERROR(OracleInconclusive);
BKK_DEFINE_ERROR(HypothesisViolated);
BKK_DEFINE_ERROR(MalformedInput);

#undef BKK_DEFINE_ERROR

}  // namespace bkk
