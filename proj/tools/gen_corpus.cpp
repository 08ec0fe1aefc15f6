// Writes the bundled instance corpus as JSON files into the directory given
// as the single argument.
#include <cstdio>
#include <filesystem>

#include "skelcat/instances.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <output-dir>\n", argv[0]);
        return 2;
    }
    std::filesystem::create_directories(argv[1]);
    for (const auto& [name, file] : skelcat::bundled_corpus()) {
        std::string path = std::string(argv[1]) + "/" + name;
        skelcat::save_instance(file, path);
        std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}
