#pragma once

namespace octaboson {

/// Selects the serial reference kernel or its OpenMP counterpart.
enum class Exec { serial, parallel };

}  // namespace octaboson
