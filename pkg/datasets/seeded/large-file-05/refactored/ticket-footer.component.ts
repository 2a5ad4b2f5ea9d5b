import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-ticket-footer', template: `<p>{{ title }}</p>` })
export class TicketFooterComponent { title = 'Ticket footer'; }
