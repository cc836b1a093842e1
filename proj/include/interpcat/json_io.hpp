#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "interpcat/karoubi.hpp"
#include "interpcat/oracle.hpp"
#include "interpcat/semisimplify.hpp"
#include "interpcat/symfun.hpp"

namespace interpcat {

using Json = nlohmann::ordered_json;

// Malformed payload; `path` points at the offending field, e.g. "$.terms[0].coeff".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Inline JSON when the argument starts with {, [, ", - or a digit; else a file path.
Json load_payload(const std::string& arg, const std::string& what);

Json to_json(const ObjectSignature& s);
Json to_json(const Diagram& d);
Json to_json(const Morphism& f);
Json to_json(const Partition& p);
Json to_json(const BiPartition& p);
Json to_json(Flavor f, const SimpleLabel& l);
Json to_json(const TriplePartition& t);
Json to_json(const MomentSequence& m);
Json to_json(const ShiftData& s);
Json to_json(const GramReport& g);
Json to_json(const StructureReport& r);

ObjectSignature object_from_json(const Json& j, const std::string& path = "$");
Diagram diagram_from_json(const Json& j, const std::string& path = "$");
Morphism morphism_from_json(const Json& j, const std::string& path = "$");
Partition partition_from_json(const Json& j, const std::string& path = "$");
BiPartition bipartition_from_json(const Json& j, const std::string& path = "$");
// A partition array for S/O/Sp, a {"black","white"} object for GL.
SimpleLabel label_from_json(Flavor f, const Json& j, const std::string& path = "$");
TriplePartition triple_from_json(const Json& j, const std::string& path = "$");
MomentSequence moments_from_json(const Json& j, const std::string& path = "$");
ShiftData shift_from_json(const Json& j, const std::string& path = "$");
std::vector<Rational> rationals_from_json(const Json& j, const std::string& path = "$");
std::vector<int> ints_from_json(const Json& j, const std::string& path = "$");

// A morphism payload, or a bare diagram promoted to a one-term morphism.
Morphism morphism_or_diagram(const Json& j, const std::string& path = "$");

}  // namespace interpcat
