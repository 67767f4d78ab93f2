#pragma once

#include <string>
#include <vector>

namespace paracalc {

// The shipped session corpus, embedded at build time so `paracalc catalog`
// can write it out next to any project.
struct EmbeddedSession {
    std::string name;
    std::string text;
};

const std::vector<EmbeddedSession>& embedded_sessions();

} // namespace paracalc
