/**
 * @file charnum_main.cpp
 * @brief Entry point for the charnum command-line tool.
 */
#include "charnum/cli.hpp"

int main(int argc, char** argv) { return charnum::run_cli(argc, argv); }
