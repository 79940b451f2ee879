#ifndef HSC_BIGINT_HPP
#define HSC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace hsc {

// Group orders and feasibility arithmetic are unbounded by contract.
using BigInt = boost::multiprecision::cpp_int;

} // namespace hsc

#endif
