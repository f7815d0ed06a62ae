#pragma once

namespace locdense {

// Every parallel kernel in this library has a serial twin producing
// bit-identical results; Exec selects which one runs. Parallel reductions
// always merge with the documented tie-break orders, never first-found,
// so output is schedule independent.
enum class Exec { serial, parallel };

} // namespace locdense
