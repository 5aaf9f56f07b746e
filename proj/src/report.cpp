#include "abszeta/report.hpp"

#include <cmath>
#include <sstream>

namespace abszeta {

std::string VerificationReport::format_double(double value) {
    std::ostringstream out;
    out.precision(12);
    out << value;
    return out.str();
}

std::string VerificationReport::format_complex(Complex value) {
    std::ostringstream out;
    out.precision(12);
    out << value.real();
    if (value.imag() != 0.0)
        out << (std::signbit(value.imag()) ? " - " : " + ") << std::abs(value.imag()) << "i";
    return out.str();
}

}  // namespace abszeta
