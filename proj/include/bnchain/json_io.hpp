#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bnchain/brill_noether.hpp"
#include "bnchain/chain.hpp"
#include "bnchain/divisor.hpp"
#include "bnchain/oracle.hpp"
#include "bnchain/partition.hpp"
#include "bnchain/tableau.hpp"

namespace bnchain::json_io {

// nlohmann::json keeps object keys in std::map, so dumps are key-sorted.
using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const ResidueSet& s);

Json to_json(const TorsionProfile& m);

Json to_json(const DisplacementTableau& t);
DisplacementTableau tableau_from_json(const Json& j, int alphabet);

Json to_json(const ChainSpec& spec);
ChainSpec chain_from_json(const Json& j);

Json to_json(const ChainDivisor& d);
ChainDivisor divisor_from_json(const Json& j);

Json to_json(const StandardForm& f);
StandardForm standard_form_from_json(const Json& j);

Json to_json(const TorusDescriptor& t);
Json to_json(const Component& c);
Json to_json(const GeneralityVerdict& v);
Json to_json(const ExpectedClass& c);
Json to_json(const CrossCheckReport& r);

/// Parses JSON text; errors carry the byte offset.
Json parse(std::string_view text);

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
Json load_argument(const std::string& arg);

/// Comma-separated integers, e.g. "2,2". An empty string is an empty list.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace bnchain::json_io
