#include <fstream>

#include "doctest.h"
#include "gradpfa/manifest.hpp"

using namespace gradpfa;

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex(std::string("")) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex(std::string("abc")) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex(std::string(
              "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")) ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // spans multiple blocks
    CHECK(sha256_hex(std::string(1000, 'a')) ==
          "41edece42d63e8d9bf515a9ba6932e1c20cbc9f5a5d134645adb5db1b9737ea3");
}

TEST_CASE("manifest round trip") {
    std::string dir = GRADPFA_TEST_TMP_DIR;
    std::string artifact = dir + "/artifact.csv";
    {
        std::ofstream out(artifact);
        out << "x,y\n1,2\n";
    }
    RunManifest m;
    m.command = "geometry";
    m.tool_version = "0.1.0";
    m.parameters["bc"] = "D";
    m.add_output(artifact);
    std::string mpath = dir + "/manifest.json";
    m.write(mpath);

    std::ifstream in(mpath);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("geometry") != std::string::npos);
    CHECK(text.find(sha256_file(artifact)) != std::string::npos);
    // byte-identical reruns hash identically
    CHECK(sha256_file(artifact) == sha256_file(artifact));
}
