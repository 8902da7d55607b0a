#pragma once

#include "siegel/qexp.hpp"

#include <iosfwd>
#include <string>

namespace siegel {

// Line-oriented exchange format:
//   SIEGELQEXP v1 g=<g> N=<N> k=<k or ?> ring=<desc> tau=<tau>
//   <upper triangle of the doubled index, row-major, space-separated> : <coefficient>
// Terms are emitted in increasing (trace, entries) order so output is
// byte-stable.
std::string qexp_to_text(const QExpansion& f);
QExpansion qexp_from_text(const std::string& text);

void qexp_write(std::ostream& os, const QExpansion& f);
QExpansion qexp_read(std::istream& is);

QExpansion qexp_load(const std::string& path);
void qexp_save(const std::string& path, const QExpansion& f);

}  // namespace siegel
