#ifndef WIREMONO_CLI_HPP_
#define WIREMONO_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace wiremono::cli {

// Exit protocol: 0 = success (including an exhausted search), 1 = usage or
// parse error, 2 = a counterexample / relation failure was found.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wiremono::cli

#endif  // WIREMONO_CLI_HPP_
