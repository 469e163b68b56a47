#ifndef HMF_JSON_IO_HPP
#define HMF_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hmf/qexp.hpp"

namespace hmf {

using json = nlohmann::ordered_json;

/* {"poly": [c0, ..., 1], "integral_basis": optional rows in power coordinates} */
json field_to_json(field_ptr const & F);
field_ptr field_from_json(json const & j);

/* basis rows of the lattice as "num/den" strings */
json ideal_to_json(frac_ideal const & I);
frac_ideal ideal_from_json(field_ptr const & F, json const & j);

json ring_to_json(coeff_ring const & R);
coeff_ring ring_from_json(json const & j);

/* {"kind":"universal","exps":[...]} and
 * {"kind":"residue","p":p,"exps":{"P1,1":a,...}} */
json weight_to_json(universal_weight const & w);
json weight_to_json(residue_weight const & w);
universal_weight universal_weight_from_json(json const & j);
residue_weight residue_weight_from_json(field_ptr const & F, json const & j);

json qexp_to_json(qexpansion const & f);
qexpansion qexp_from_json(json const & j);

/* ParseError on unreadable or malformed files */
json read_json_file(std::string const & path);
void write_json_file(std::string const & path, json const & j);

/* Zeta memo cache: <dir>/zeta/<poly key>.json holding {"poly": [...],
 * "values": {"k": "num/den"}}. */
std::string field_cache_key(field_ptr const & F);
void load_zeta_cache(std::string const & dir, field_ptr const & F);
void save_zeta_cache(std::string const & dir, field_ptr const & F);

} // namespace hmf

#endif
