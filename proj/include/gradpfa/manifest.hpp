#pragma once

// Run manifests: every emitted artifact is traceable to the command,
// parameters, fixtures and tool version that produced it.

#include <map>
#include <string>
#include <vector>

namespace gradpfa {

std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& s);
std::string sha256_file(const std::string& path);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::map<std::string, std::string> fixtures;   // path -> digest
    std::string tool_version;
    std::map<std::string, std::string> outputs;    // path -> digest

    void add_fixture(const std::string& path);
    void add_output(const std::string& path);
    std::string to_json() const;
    void write(const std::string& path) const;
};

} // namespace gradpfa
