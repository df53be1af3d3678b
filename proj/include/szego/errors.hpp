#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace szego {

// Base for all numeric-domain failures.  name() is the stable identifier the
// CLI prints on the diagnostic stream and maps to exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Sampling grid too small for the coefficient band.
struct BandAliasing : Error {
    explicit BandAliasing(const std::string& d) : Error("BandAliasing", d) {}
};

// Symbol modulus drops below vanish_tol relative to its grid maximum.
struct NearVanishingSymbol : Error {
    explicit NearVanishingSymbol(const std::string& d)
        : Error("NearVanishingSymbol", d) {}
};

struct NonzeroWinding : Error {
    NonzeroWinding(int winding, const std::string& d)
        : Error("NonzeroWinding", d), winding(winding) {}
    int winding;
};

struct PointOnCircle : Error {
    explicit PointOnCircle(const std::string& d) : Error("PointOnCircle", d) {}
};

struct SingularSection : Error {
    explicit SingularSection(const std::string& d)
        : Error("SingularSection", d) {}
};

struct SingularMomentSection : Error {
    explicit SingularMomentSection(const std::string& d)
        : Error("SingularMomentSection", d) {}
};

struct ReflectionNotInvertible : Error {
    explicit ReflectionNotInvertible(const std::string& d)
        : Error("ReflectionNotInvertible", d) {}
};

struct ContractionFailure : Error {
    explicit ContractionFailure(const std::string& d)
        : Error("ContractionFailure", d) {}
};

struct NoContraction : Error {
    explicit NoContraction(const std::string& d) : Error("NoContraction", d) {}
};

struct SymmetryViolation : Error {
    explicit SymmetryViolation(const std::string& d)
        : Error("SymmetryViolation", d) {}
};

}  // namespace szego
