#ifndef THINBASE_IO_HPP
#define THINBASE_IO_HPP

#include <string>

#include <json.hpp>

#include "thinbase/char_table.hpp"
#include "thinbase/decompose.hpp"
#include "thinbase/group.hpp"
#include "thinbase/perm_stats.hpp"
#include "thinbase/sampler.hpp"

namespace thinbase {

using Json = nlohmann::json;

// {"name": str, "kind": "permutation"|"table", "degree": int,
//  "generators": [[int,...],...]}  or  {"kind":"table", "table": [[...],...]}
FiniteGroup group_from_json(const Json& j);
FiniteGroup load_group(const std::string& path);

// {"group": str, "order": int, "classes": [{"label","size","rep_order"}],
//  "chars": [[[re,im],...],...]}
CharacterTable table_from_json(const Json& j);
CharacterTable load_character_table(const std::string& path);

Json mask_to_json(const SubsetMask& m);
Json certificate_to_json(const DecompositionCertificate& cert);
Json stratified_to_json(const StratifiedReport& rep);
Json thin_pair_to_json(const ThinPairResult& r);

void write_json(const std::string& path, const Json& j);
Json read_json(const std::string& path);

}  // namespace thinbase

#endif
