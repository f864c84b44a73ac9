#ifndef RESILAT_EXAMPLES_HPP
#define RESILAT_EXAMPLES_HPP

#include "resilat/io.hpp"

namespace resilat {

/// Names of the built-in fixtures, sorted.
std::vector<std::string> example_names();

/// Returns the named built-in structure; throws UnknownExample.
Structure example(const std::string& name);

}  // namespace resilat

#endif
