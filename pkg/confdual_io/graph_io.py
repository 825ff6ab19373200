# this file contains functions reading and writing graph files
import os

from confdual_graph import parse_graph, serialize_graph, serialize_undirected
from .file_io import load_txt_file, save_txt_file, load_list_from_folder, fileparts

def load_graph(file_path, debug=True):
	'''
	load a side information graph from a graph file, see parse_graph for the format
	'''
	return parse_graph(load_txt_file(file_path, debug=debug), debug=debug)

def save_graph(graph, save_path, comment=None, debug=True):
	save_txt_file(serialize_graph(graph, comment=comment), save_path, debug=debug)

def save_undirected(graph, save_path, comment=None, debug=True):
	'''
	dump an explicit undirected graph with 'u <a> <b>' lines
	'''
	save_txt_file(serialize_undirected(graph, comment=comment), save_path, debug=debug)

def load_graphs_from_folder(folder_path, ext_filter='.g', debug=True):
	'''
	load every graph file of a folder

	outputs:
		graphs:		a dictionary from the file name (without extension) to the SideInformationGraph
	'''
	file_list, _ = load_list_from_folder(folder_path, ext_filter=ext_filter, debug=debug)
	graphs = dict()
	for file_path in file_list:
		_, filename, _ = fileparts(file_path)
		graphs[filename] = load_graph(file_path, debug=debug)
	return graphs
