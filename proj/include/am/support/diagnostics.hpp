#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace am {

struct Loc {
    std::string file;
    int line = 0;
    int col = 0;

    bool operator==(const Loc&) const = default;
    std::string str() const {
        std::ostringstream os;
        os << file << ':' << line << ':' << col;
        return os.str();
    }
};

enum class Severity { Warning, Error };

inline const char* severity_name(Severity s) {
    return s == Severity::Error ? "error" : "warning";
}

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string message;
    Loc loc;

    std::string str() const {
        return loc.str() + ": " + severity_name(severity) + ": " + message;
    }
};

class DiagnosticSink {
public:
    void error(const Loc& loc, std::string msg) {
        diags_.push_back({Severity::Error, std::move(msg), loc});
    }
    void warning(const Loc& loc, std::string msg) {
        diags_.push_back({Severity::Warning, std::move(msg), loc});
    }
    void add(Diagnostic d) { diags_.push_back(std::move(d)); }

    bool has_errors() const {
        for (const auto& d : diags_)
            if (d.severity == Severity::Error) return true;
        return false;
    }
    const std::vector<Diagnostic>& all() const { return diags_; }

    void print(std::ostream& os) const {
        for (const auto& d : diags_) os << d.str() << '\n';
    }

private:
    std::vector<Diagnostic> diags_;
};

// Base for all toolchain errors that carry a source location.
struct ToolError : std::runtime_error {
    Loc loc;
    ToolError(const Loc& l, const std::string& msg)
        : std::runtime_error(l.file.empty() ? msg : l.str() + ": error: " + msg),
          loc(l) {}
    explicit ToolError(const std::string& msg) : std::runtime_error(msg) {}
};

struct LexError : ToolError {
    using ToolError::ToolError;
};
struct ParseError : ToolError {
    using ToolError::ToolError;
};
struct ElabError : ToolError {
    using ToolError::ToolError;
};

} // namespace am
