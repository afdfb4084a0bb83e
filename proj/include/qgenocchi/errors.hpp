#ifndef QGENOCCHI_ERRORS_HPP
#define QGENOCCHI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgenocchi
{

// Precondition violated by an argument (negative index, even d, ...).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class division_by_zero : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A denominator vanished under substitution q -> q0.
class pole_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Numeric series or quadrature did not reach the requested tolerance.
class non_convergence : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace qgenocchi

#endif
