#pragma once

#include <string>
#include <string_view>

#include "lensspec/lattice.hpp"

namespace lensspec {

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// Digest of the table's interchange JSON; equal tables give equal digests.
std::string table_digest(const CountTable& table);

std::string certificate_digest(const ThetaCertificate& cert);

}  // namespace lensspec
