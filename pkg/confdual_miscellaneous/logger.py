# -*- coding: utf-8 -*-
from __future__ import print_function

from .type_check import issequence
# logging

def print_log(print_str, log=None, same_line=False, display=True):
	'''
	print a string to the terminal and to a log file

	parameters:
		print_str:          a string to print
		log:                a opened file to save the log, None to skip the file
		same_line:          True if we want to print the string without a new next line
		display:            False if we want to disable to print the string onto the terminal
	'''
	if display:
		if same_line: print('{}'.format(print_str), end='')
		else: print('{}'.format(print_str))

	if log is None: return
	if same_line: log.write('{}'.format(print_str))
	else: log.write('{}\n'.format(print_str))
	log.flush()

def print_table(header, rows, log=None, width=14, display=True):
	'''
	print a table of strings with fixed column width, e.g., the achievable points of a rate region

	parameters:
		header:             a list of column names
		rows:               a list of rows, each row is a list of values (converted by str)
		log:                a opened file to save the log
		width:              width of each column
	'''
	assert issequence(header) and all(issequence(row) and len(row) == len(header) for row in rows), 'table rows do not match the header'
	fmt = '%' + str(width) + 's'
	print_log(' '.join([fmt % column for column in header]), log=log, display=display)
	for row in rows:
		print_log(' '.join([fmt % str(value) for value in row]), log=log, display=display)
