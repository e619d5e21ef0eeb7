#include "lexidim/cli.hpp"

int main(int argc, char** argv) {
    return lexidim::cli::main_entry(argc, argv);
}
