import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-ticket-header', template: `<p>{{ title }}</p>` })
export class TicketHeaderComponent { title = 'Ticket header'; }
