#pragma once

#include "qcoh/element_io.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace qcoh::cli {

using Json = nlohmann::ordered_json;

// JSON element form: list of {coeff: "p/q", even: {name: exp}, odd: [names]},
// in the canonical term order.
Json element_terms_json(const Element& e, const NameAliases& aliases = {});
Element element_from_terms_json(const SignaturePtr& sig, const Json& terms,
                                const NameAliases& aliases = {});

// Runs one command line (without the program name). Payload goes to `out`,
// diagnostics and traces to `err`. Returns the process exit code: 0 ok,
// 2 precondition violation, 1 internal error, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcoh::cli
