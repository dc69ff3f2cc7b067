#include "mapr/cli.hpp"

int main(int argc, char** argv) { return mapr::cli::run(argc, argv); }
