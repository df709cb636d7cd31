#pragma once

#include <stdexcept>
#include <string>

namespace finmod {

enum class Errc {
    MalformedSpec,
    NonAssociative,
    BadUnit,
    CharNotPrimePower,
    RingMismatch,
    BoundExceeded,
    NotASubmodule,
    IoFailure,
    VersionMismatch,
    InternalInconsistency,
    UnknownSelector,
    InapplicableSuite,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace finmod
