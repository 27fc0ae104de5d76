# Script language package
