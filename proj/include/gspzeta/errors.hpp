#pragma once

#include <stdexcept>
#include <string>

namespace gspzeta {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 2 (invalid input) unless stated otherwise.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GSPZETA_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

GSPZETA_DEFINE_ERROR(InvalidArgument);
GSPZETA_DEFINE_ERROR(InvalidInversion);
GSPZETA_DEFINE_ERROR(DivisionByNonUnit);
GSPZETA_DEFINE_ERROR(InvalidBesselDatum);
GSPZETA_DEFINE_ERROR(UnsupportedCase);
GSPZETA_DEFINE_ERROR(Unsupported);
GSPZETA_DEFINE_ERROR(Infeasible);
GSPZETA_DEFINE_ERROR(PoleError);
GSPZETA_DEFINE_ERROR(UnsupportedParameters);
GSPZETA_DEFINE_ERROR(QuadratureError);
GSPZETA_DEFINE_ERROR(DivergentParameters);
GSPZETA_DEFINE_ERROR(ParseError);

#undef GSPZETA_DEFINE_ERROR

}  // namespace gspzeta
