#include "ara/cli/commands.hpp"

int main(int argc, char** argv) { return ara::cli::run(argc, argv); }
