#pragma once

#include <ostream>

#include <json.hpp>

#include "ptmrad/ptm.hpp"
#include "ptmrad/recurrence.hpp"
#include "ptmrad/sidelobe.hpp"
#include "ptmrad/weights.hpp"

namespace ptmrad {

// JSON payloads keep insertion order so emitted bytes are reproducible.
// Exact integers that can outgrow double precision are emitted as decimal
// strings; structurally small values (p, M, m, indices, +-1 entries) stay
// plain JSON numbers.
using json = nlohmann::ordered_json;

json to_json(const Int& v);
json to_json(const PartitionBlocks& part);
json to_json(const ProuhetSum& sum);
json to_json(const CoefficientVector& coeffs);
json to_json(const SidelobeReport& report);
json to_json(const ExponentShiftReport& report);
json to_json(const std::vector<RecurrenceRule>& rules);

// The 2^p x `length` sign table, rows i, columns n (n >= p routes
// through v_p).
json weight_table_json(Modulus p, int length);
void write_weight_table_csv(std::ostream& out, Modulus p, int length);

// One row per element: n, v_p(n), block.
void write_partition_csv(std::ostream& out, const PartitionBlocks& part);

void write_sidelobe_csv(std::ostream& out, const SidelobeReport& report);

}  // namespace ptmrad
